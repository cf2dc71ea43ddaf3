#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gradalg/field.hpp"
#include "gradalg/grade_group.hpp"
#include "gradalg/verdict.hpp"

namespace gradalg {

// Coefficient vector over the basis; entries are canonical field representatives.
using Element = std::vector<mpq_class>;

struct BasisElement {
  std::string name;
  GroupElement degree;
};

// b_i * b_j has coefficient value on b_k.
struct StructureConstant {
  std::size_t i = 0, j = 0, k = 0;
  mpq_class value;
};

// Central graded subalgebra R of A, spanned by homogeneous elements of A.
struct DesignatedBase {
  std::vector<Element> elements;
};

// Finite-dimensional algebra over Q or F_p with a homogeneous basis.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  // Entries are reduced into the field, duplicates summed, zeros dropped and
  // the table sorted by (i, j, k).
  GradedAlgebra(FieldSpec field, GradeGroup group, std::vector<BasisElement> basis,
                std::vector<StructureConstant> table, Element unit);

  const FieldSpec& field() const { return field_; }
  const GradeGroup& group() const { return group_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const GroupElement& degree(std::size_t i) const { return basis_.at(i).degree; }
  const std::vector<StructureConstant>& table() const { return table_; }
  const Element& unit() const { return unit_; }

  const std::optional<DesignatedBase>& base() const { return base_; }
  GradedAlgebra with_base(DesignatedBase base) const;
  GradedAlgebra without_base() const;
  // The designated base, defaulting to k * 1.
  DesignatedBase base_or_ground() const;

  const Json& provenance() const { return provenance_; }
  GradedAlgebra with_provenance(Json p) const;

  Element zero() const { return Element(dim(), 0); }
  Element basis_element(std::size_t i) const;
  Element multiply(const Element& x, const Element& y) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(const mpq_class& c, const Element& x) const;
  Element normalize(const Element& x) const;
  bool is_zero(const Element& x) const;

  // Degree of a nonzero homogeneous element; nullopt otherwise.
  std::optional<GroupElement> homogeneous_degree(const Element& x) const;
  // Basis indices of each nonempty component, keyed by degree.
  std::map<GroupElement, std::vector<std::size_t>> components() const;
  // Components of an element by degree.
  std::map<GroupElement, Element> homogeneous_parts(const Element& x) const;

  bool is_commutative() const;

  // Identical tables, degrees, unit and field (names ignored).
  bool same_table(const GradedAlgebra& o) const;

 private:
  FieldSpec field_;
  GradeGroup group_;
  std::vector<BasisElement> basis_;
  std::vector<StructureConstant> table_;
  Element unit_;
  std::optional<DesignatedBase> base_;
  Json provenance_;
};

struct ValidationReport {
  bool ok = true;
  // "grading-closure", "associativity", "unit", "unit-degree", "zero-algebra", "base"
  std::string violation;
  std::optional<std::array<std::size_t, 3>> triple;
  std::string message;
};

ValidationReport validate(const GradedAlgebra& a);

// Homogeneous subspace: basis vectors grouped by degree.
struct GradedSubspace {
  std::vector<Element> basis;
  std::vector<GroupElement> degrees;

  std::size_t dim() const { return basis.size(); }
};

// Plain subspace of A.
struct Subspace {
  std::vector<Element> basis;
  std::size_t dim() const { return basis.size(); }
};

struct EnumerationOptions {
  // Cap on elements enumerated per component over finite fields.
  std::uint64_t max_enum = 200000;
  // Cap on grid points evaluated per component over Q.
  std::uint64_t max_grid = 20000;
};

std::vector<GroupElement> support(const GradedAlgebra& a);

struct InvertibleSupport {
  std::vector<GroupElement> degrees;       // components known to contain a unit
  std::vector<GroupElement> undetermined;  // components where the search was inconclusive
  Truth status = Truth::yes;               // yes when every component was decided
  std::map<GroupElement, std::pair<Element, Element>> witnesses;  // unit and its inverse
};

InvertibleSupport invertible_support(const GradedAlgebra& a, const EnumerationOptions& opts = {});

// Two-sided inverse of x, if any.
std::optional<Element> inverse_of(const GradedAlgebra& a, const Element& x);

GradedSubspace graded_ideal_closure(const GradedAlgebra& a, const std::vector<Element>& gens);
GradedSubspace center(const GradedAlgebra& a);
Subspace jacobson_radical(const GradedAlgebra& a);
GradedSubspace graded_radical_part(const GradedAlgebra& a);

// Orthogonal primitive idempotents summing to 1 of the commutative subalgebra
// spanned by the given elements (which must contain 1 and be closed).
std::vector<Element> primitive_idempotents(const GradedAlgebra& a, const std::vector<Element>& commutative_basis);

Verdict is_graded_simple(const GradedAlgebra& a);
Verdict is_graded_division_ring(const GradedAlgebra& a, const EnumerationOptions& opts = {});
Verdict is_graded_field(const GradedAlgebra& a, const EnumerationOptions& opts = {});
// Uses the designated base of a (k * 1 when absent).
Verdict is_graded_central_simple(const GradedAlgebra& a, const EnumerationOptions& opts = {});

// Standalone algebra on a closed homogeneous subspace containing 1.
GradedAlgebra subalgebra(const GradedAlgebra& a, const std::vector<Element>& basis,
                         const std::string& prefix = "s");
// A / I; degrees kept when I is graded (homogeneous basis), trivial grading otherwise.
GradedAlgebra quotient_algebra(const GradedAlgebra& a, const std::vector<Element>& ideal, bool graded);
// Degree-zero component as an algebra.
GradedAlgebra degree_zero_part(const GradedAlgebra& a);
// The designated base R as a standalone algebra.
GradedAlgebra base_algebra(const GradedAlgebra& a);

GradedAlgebra opposite(const GradedAlgebra& a);
GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b);
// A (x)_R B for the designated bases of a and b, identified generator by generator.
GradedAlgebra tensor_product_over_base(const GradedAlgebra& a, const GradedAlgebra& b);
// M_n(A)(d) with deg(x E_ij) = deg x - d_i + d_j.
GradedAlgebra matrix_shift(const GradedAlgebra& a, const std::vector<GroupElement>& shifts);

// Basis position of x E_ij in matrix_shift(a, shifts) for an algebra of dimension m.
inline std::size_t matrix_index(std::size_t n, std::size_t m, std::size_t i, std::size_t j, std::size_t x) {
  return (i * n + j) * m + x;
}

}  // namespace gradalg
