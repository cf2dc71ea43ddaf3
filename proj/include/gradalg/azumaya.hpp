#pragma once

#include <optional>
#include <vector>

#include "gradalg/constructions.hpp"
#include "gradalg/graded_algebra.hpp"

namespace gradalg {

// Matrix of psi(a (x) b)(x) = a x b on A (x)_R A^op -> End_R(A), for a
// homogeneous R-basis c_1..c_n of A and a k-basis r_1..r_s of R.
struct PsiMatrix {
  std::vector<Element> base_basis;  // r_l as elements of A
  std::vector<Element> basis;       // c_p
  std::vector<GroupElement> degrees;
  // entries[(p * n + q) * n * n + i * n + j] = coordinates over r_l of rho_pq(i, j),
  // where c_i c_q c_j = sum_p rho_pq(i, j) c_p
  std::vector<Element> entries;
  // degree of each nonzero homogeneous entry
  std::vector<std::optional<GroupElement>> entry_degrees;
  std::size_t k_rank = 0;  // rank of the matrix expanded over k
  bool bijective = false;
  bool degree_preserving = false;

  std::size_t rank() const { return basis.size(); }
  const Element& entry(std::size_t p, std::size_t q, std::size_t i, std::size_t j) const {
    const std::size_t n = rank();
    return entries[(p * n + q) * n * n + i * n + j];
  }
  Json to_json(const GradeGroup& g) const;
};

// Homogeneous R-basis of A, chosen greedily among the basis vectors of A;
// nullopt when the greedy choice does not exhibit A as R-free.
std::optional<std::vector<std::size_t>> homogeneous_base_basis(const GradedAlgebra& a);

// Uses the designated base (k * 1 when absent). Throws UnsupportedError
// when no homogeneous R-basis is found.
PsiMatrix psi_matrix(const GradedAlgebra& a);
// The same for basis vectors b_x, x in basis; throws DomainError unless they form an R-basis.
PsiMatrix psi_matrix(const GradedAlgebra& a, const std::vector<std::size_t>& basis);

// Local factor Z e of a commutative base and the rank of A e over it.
struct LocalBlock {
  Element idempotent;
  std::size_t dim_base = 0;
  std::size_t dim_radical = 0;
  std::size_t dim_algebra = 0;
  std::size_t generators = 0;  // minimal generator count, by Nakayama
  bool free = false;
};

// A over a commutative central subalgebra Z: local freeness and the three
// dimensions that decide whether psi is bijective.
struct SandwichReport {
  Truth verdict = Truth::undetermined;
  std::string reason;
  std::size_t dim_base = 0;
  std::size_t dim_algebra = 0;
  std::size_t dim_tensor = 0;  // A (x)_Z A^op
  std::size_t dim_end = 0;     // End_Z(A)
  std::size_t rank_psi = 0;
  std::vector<LocalBlock> blocks;
  bool projective = false;
  bool psi_bijective = false;

  Json to_json() const;
};

SandwichReport azumaya_over_base(const GradedAlgebra& a, const std::vector<Element>& base);
// Ungraded check over the centre.
SandwichReport azumaya_over_center(const GradedAlgebra& a);

struct AzumayaReport {
  Verdict faithfully_projective;
  bool psi_bijective = false;
  bool psi_graded = false;
  Truth verdict = Truth::undetermined;
  std::optional<PsiMatrix> psi;
  std::optional<SandwichReport> sandwich;

  Json to_json(const GradeGroup& g) const;
};

AzumayaReport is_graded_azumaya(const GradedAlgebra& a);

struct DeMeyerJanusz {
  std::size_t group_order = 0;
  std::size_t center_order = 0;
  std::size_t center_index = 0;
  std::size_t commutator_order = 0;
  bool verdict = false;  // |[G, G]| invertible in k

  Json to_json() const;
};

DeMeyerJanusz demeyer_janusz(const FieldSpec& k, const FiniteGroup& g);

}  // namespace gradalg
