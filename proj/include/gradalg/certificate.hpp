#pragma once

#include <string>

#include "gradalg/azumaya.hpp"
#include "gradalg/graded_algebra.hpp"
#include "gradalg/int_matrix.hpp"

namespace gradalg {

enum class CertificateStatus { verified, refuted, unchecked };

struct CertificateCheck {
  CertificateStatus status = CertificateStatus::unchecked;
  std::string kind;
  std::string detail;

  bool verified() const { return status == CertificateStatus::verified; }
  Json to_json() const;
};

std::string to_string(CertificateStatus s);

// Re-checks a certificate against the algebra it was issued for, using only
// the witness data it carries and direct arithmetic in A.
CertificateCheck verify_certificate(const GradedAlgebra& a, const Json& certificate);

// Smith form data for an integer matrix; checked without the algebra.
Json smith_certificate(const IntMatrix& m);
CertificateCheck verify_smith_certificate(const Json& certificate);

// Free homogeneous basis plus bijectivity of psi on that basis.
Json azumaya_certificate(const AzumayaReport& r);

}  // namespace gradalg
