#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradalg/errors.hpp"
#include "gradalg/graded_algebra.hpp"

namespace gradalg {

// Element of A^n(d) in coordinates: component i multiplies e_i.
using ModuleVector = std::vector<Element>;

// A^n(d) = A(d_1) + ... + A(d_n); e_i is homogeneous of degree -d_i.
struct ShiftedFreeModule {
  GradedAlgebra algebra;
  std::vector<GroupElement> shifts;

  std::size_t rank() const { return shifts.size(); }
  GroupElement basis_degree(std::size_t i) const { return algebra.group().neg(shifts.at(i)); }
  // Degree of a nonzero homogeneous vector; nullopt otherwise.
  std::optional<GroupElement> homogeneous_degree(const ModuleVector& v) const;
};

// n x m matrix over A whose (i, j) entry should lie in A_{-d_i + a_j}.
struct PatternMatrix {
  std::vector<GroupElement> row_shifts;
  std::vector<GroupElement> col_shifts;
  std::vector<Element> entries;  // row-major

  static PatternMatrix zero(const GradedAlgebra& a, std::vector<GroupElement> d, std::vector<GroupElement> alpha);
  static PatternMatrix identity(const GradedAlgebra& a, std::vector<GroupElement> d);

  std::size_t rows() const { return row_shifts.size(); }
  std::size_t cols() const { return col_shifts.size(); }
  Element& at(std::size_t i, std::size_t j) { return entries.at(i * cols() + j); }
  const Element& at(std::size_t i, std::size_t j) const { return entries.at(i * cols() + j); }
};

// Required degree -d_i + a_j of entry (i, j).
GroupElement pattern_degree(const GradeGroup& g, const PatternMatrix& m, std::size_t i, std::size_t j);
bool pattern_check(const GradedAlgebra& a, const PatternMatrix& m);
PatternMatrix pattern_product(const GradedAlgebra& a, const PatternMatrix& x, const PatternMatrix& y);
// Two-sided inverse of a square matrix over A, carrying the swapped shifts.
std::optional<PatternMatrix> pattern_inverse(const GradedAlgebra& a, const PatternMatrix& m);

Json pattern_to_json(const PatternMatrix& m);
PatternMatrix pattern_from_json(const GradedAlgebra& a, const Json& j);

struct ShiftIsoResult {
  Truth truth = Truth::undetermined;
  // "rank", "permutation", "matching", "exhaustive", "witness" or "none"
  std::string tier;
  std::string reason;
  std::optional<PatternMatrix> witness;
  std::optional<PatternMatrix> inverse;
  std::uint64_t searched = 0;

  bool yes() const { return truth == Truth::yes; }
  bool determined() const { return truth != Truth::undetermined; }
  Verdict verdict() const;
};

// Decides A^n(d) = A^m(a) as graded modules by the first applicable tier:
// rank count, permutation of shifts, matching over a graded division ring,
// exhaustive search over a finite field within opts.max_enum.
ShiftIsoResult is_shift_iso(const GradedAlgebra& a, const std::vector<GroupElement>& d,
                            const std::vector<GroupElement>& alpha, const EnumerationOptions& opts = {});
// Exhaustive search for an invertible pattern matrix; F_p only.
// Throws UnsupportedError over Q or when the search space exceeds opts.max_enum.
ShiftIsoResult exhaustive_shift_iso(const GradedAlgebra& a, const std::vector<GroupElement>& d,
                                    const std::vector<GroupElement>& alpha, const EnumerationOptions& opts = {});
// Checks a caller-supplied witness: pattern plus two-sided invertibility.
ShiftIsoResult verify_shift_witness(const GradedAlgebra& a, const PatternMatrix& w);
// d in Gamma*_{M_n(A)}: A^n(d) = A^n(0).
ShiftIsoResult gamma_star_membership(const GradedAlgebra& a, const std::vector<GroupElement>& d,
                                     const EnumerationOptions& opts = {});

// Raised when input vectors are linearly dependent over D.
class DependencyError : public DomainError {
 public:
  DependencyError(const std::string& what, Json certificate) : DomainError(what), certificate_(std::move(certificate)) {}
  const Json& certificate() const { return certificate_; }

 private:
  Json certificate_;
};

struct HomogeneousBasis {
  std::vector<ModuleVector> vectors;
  std::vector<GroupElement> degrees;
  std::size_t input_count = 0;
};

// Extends homogeneous D-independent vectors of D^m(a) to a homogeneous basis.
// Extension vectors are standard e_j for non-pivot j, ordered by degree, then index.
HomogeneousBasis extend_homogeneous_basis(const GradedAlgebra& d, const std::vector<GroupElement>& shifts,
                                          const std::vector<ModuleVector>& vectors);

struct DimensionFormula {
  std::size_t dim_submodule = 0;
  std::size_t dim_quotient = 0;
  std::size_t dim_module = 0;
  bool holds = false;
};

// dim N + dim M/N = dim M for M = D^m(a) and N spanned by homogeneous vectors.
DimensionFormula dimension_formula_check(const GradedAlgebra& d, const std::vector<GroupElement>& shifts,
                                         const std::vector<ModuleVector>& spanning);

// Explicit maps between Q (x)_M P and A, and between P (x)_A Q and M, for
// P = A^n(d), Q = A^n(-d), M = M_n(A)(d).
struct MoritaReport {
  std::size_t dim_qp = 0;  // dim_k Q (x)_M P
  std::size_t dim_pq = 0;  // dim_k P (x)_A Q
  bool theta_well_defined = false;
  bool theta_prime_well_defined = false;
  bool theta_sigma = false;              // theta o sigma = id_A
  bool sigma_theta = false;              // sigma o theta = id
  bool theta_prime_sigma_prime = false;  // theta' o sigma' = id_M
  bool sigma_prime_theta_prime = false;  // sigma' o theta' = id
  bool degrees_preserved = false;

  bool ok() const {
    return theta_well_defined && theta_prime_well_defined && theta_sigma && sigma_theta && theta_prime_sigma_prime &&
           sigma_prime_theta_prime && degrees_preserved;
  }
  Json to_json() const;
};

MoritaReport verify_morita_identities(const GradedAlgebra& a, const std::vector<GroupElement>& d);

}  // namespace gradalg
