#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gradalg/grade_group.hpp"
#include "gradalg/graded_algebra.hpp"
#include "gradalg/int_matrix.hpp"

namespace gradalg {

// Finitely generated abelian group Z^r (+ torsion), with a label per free generator.
struct K0Group {
  std::vector<std::string> labels;
  std::vector<mpz_class> torsion;
  // Block dimensions, for groups computed from simple blocks.
  std::vector<std::size_t> block_dims;

  std::size_t rank() const { return labels.size(); }
  Json to_json() const;
};

struct K0Map {
  K0Group domain;
  K0Group codomain;
  IntMatrix matrix;  // codomain.rank() x domain.rank(); column c is the image of generator c
  std::string route;

  Json to_json() const;
};

// Free group on the cosets of Gamma / Gamma*_D, labelled "<representative>+Γ*".
// Throws HypothesisError unless D is a graded division ring and
// UnsupportedError when the index of Gamma*_D is infinite.
K0Group k0gr_graded_division(const GradedAlgebra& d);

// Number of simple blocks of A / J(A), ignoring the grading.
// Throws FactorizationCapError when idempotent splitting over Q hits its cap.
K0Group k0_ungraded(const GradedAlgebra& a);

// True iff Gamma is finite and 1 lies in A_g A_{-g} for every g in Gamma.
Verdict is_strongly_graded(const GradedAlgebra& a);

// K0(A_0); throws HypothesisError when A is not strongly graded.
K0Group k0gr_via_dade(const GradedAlgebra& a);

enum class K0Route { automatic, division, matrix, dade };

std::string to_string(K0Route r);
K0Route route_from_string(const std::string& s);

// Graded K0 of a supported shape: a graded division ring, M_n(D)(d) with
// matrix-shift provenance over a graded division ring D, or strongly graded.
K0Group k0gr(const GradedAlgebra& a, K0Route route = K0Route::automatic);

// [R(g)] -> [A(g)] for the designated base R of A, which must be a graded field.
K0Map k0gr_map(const GradedAlgebra& a, K0Route route = K0Route::automatic);

struct TorsionReport {
  std::size_t kernel_rank = 0;  // the kernel is free
  std::size_t cokernel_free_rank = 0;
  std::vector<mpz_class> kernel_factors;    // always empty: subgroups of Z^r are free
  std::vector<mpz_class> cokernel_factors;  // invariant factors > 1
  std::size_t n = 0;
  bool kernel_finite = false;
  bool cokernel_finite = false;
  bool is_n2_torsion = false;  // both finite with exponent dividing n^2
  bool n_smooth = false;       // every invariant factor has only prime divisors of n
  bool localized_iso = false;  // bijective after inverting n

  Json to_json() const;
};

TorsionReport torsion_report(const K0Map& m, std::size_t n);

// Hypotheses of the torsion theorems for A over its designated base R.
struct TorsionHypotheses {
  Truth graded_azumaya = Truth::undetermined;
  bool graded_free = false;
  std::size_t rank = 0;
  std::vector<GroupElement> basis_degrees;
  Truth degrees_in_gamma_star = Truth::undetermined;
  std::string failure;  // empty when all hypotheses hold

  bool hold() const { return failure.empty(); }
  Json to_json(const GradeGroup& g) const;
};

TorsionHypotheses torsion_hypotheses(const GradedAlgebra& a);

struct TorsionCheck {
  TorsionHypotheses hypotheses;
  K0Map map;
  TorsionReport report;

  Json to_json(const GradeGroup& g) const;
};

TorsionCheck torsion_check(const GradedAlgebra& a, K0Route route = K0Route::automatic);

// The graded D-functor properties of CK0 and ZK0 for A over R, with
// M_k(A)(d) where k = d.size().
struct DFunctorReport {
  std::size_t k = 0;
  Truth hypothesis = Truth::undetermined;  // d in Gamma*_{M_k(R)}
  IntMatrix composite;                     // psi o phi on K0gr(A)
  bool composite_is_k = false;
  bool axiom1_ck = false;
  bool axiom1_zk = false;
  bool axiom2_ck = false;
  bool axiom2_zk = false;
  bool axiom3_ck = false;
  bool axiom3_zk = false;
  std::string note;

  bool all_pass() const { return axiom1_ck && axiom1_zk && axiom2_ck && axiom2_zk && axiom3_ck && axiom3_zk; }
  Json to_json() const;
};

// Matrix of X -> X^k(-d) on K0gr(A) in the shift-class model.
IntMatrix shift_composite(const GradedAlgebra& a, const std::vector<GroupElement>& d,
                          K0Route route = K0Route::automatic);

DFunctorReport dfunctor_axiom_suite(const GradedAlgebra& a, const std::vector<GroupElement>& d,
                                    K0Route route = K0Route::automatic);

}  // namespace gradalg
