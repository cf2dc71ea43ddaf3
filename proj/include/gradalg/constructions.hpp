#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gradalg/graded_algebra.hpp"

namespace gradalg {

// Finite group given by its Cayley table: table[a][b] = a*b.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table);

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup dihedral(std::size_t n);  // order 2n
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup alternating(std::size_t n);
  static FiniteGroup quaternion8();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  // Closure of the given permutations (images of 0..m-1).
  static FiniteGroup from_permutations(std::string name, const std::vector<std::vector<std::size_t>>& gens);

  const std::string& name() const { return name_; }
  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const;
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  bool is_abelian() const;

 private:
  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
};

// The groups of order <= 12 used by the group-ring checks.
std::vector<FiniteGroup> small_groups();

struct CenterCommutator {
  std::vector<std::size_t> center;
  std::vector<std::size_t> commutator;
  std::size_t center_index = 0;      // [G : Z(G)]
  std::size_t commutator_order = 0;  // |[G, G]|
};

CenterCommutator group_center_and_commutator(const FiniteGroup& g);

// Isomorphism of an abelian FiniteGroup onto Z_{d_1} x ... x Z_{d_t}.
struct AbelianStructure {
  GradeGroup group;
  std::vector<GroupElement> image;  // image[g]
};
AbelianStructure abelian_structure(const FiniteGroup& g);

// k[H] graded by the finite group H itself.
GradedAlgebra group_algebra(const FieldSpec& k, const GradeGroup& h);
// k[G]: graded by G when abelian, trivially graded otherwise.
GradedAlgebra group_algebra(const FieldSpec& k, const FiniteGroup& g);

// Normalized 2-cocycle on a finite grade group; values indexed by element positions.
struct Cocycle {
  GradeGroup group;
  std::vector<mpq_class> values;  // values[a * |G| + b] = alpha(a, b)

  mpq_class operator()(std::size_t a, std::size_t b) const { return values[a * order() + b]; }
  std::size_t order() const { return static_cast<std::size_t>(*group.order()); }
};

// Divides by alpha(0,0) and checks the cocycle identity, throwing DomainError with the failing triple.
Cocycle normalize_cocycle(const FieldSpec& k, Cocycle c);
GradedAlgebra twisted_group_algebra(const FieldSpec& k, const Cocycle& alpha);

// Cocycle realizing (a, b / k) on Z2 x Z2.
Cocycle quaternion_cocycle(const FieldSpec& k, const mpq_class& a, const mpq_class& b);
GradedAlgebra quaternion_algebra(const FieldSpec& k, const mpq_class& a, const mpq_class& b);

// Replaces the grade group via the homomorphism sending generator i to images[i].
GradedAlgebra regrade(const GradedAlgebra& a, const GradeGroup& target, const std::vector<GroupElement>& images);

// Upper-triangular 2x2 matrices, deg E12 = d.
GradedAlgebra upper_triangular(const FieldSpec& k, const GradeGroup& g, const GroupElement& d);
// k x k with both idempotents in degree 0.
GradedAlgebra split_product(const FieldSpec& k, const GradeGroup& g, std::size_t copies = 2);
// The ground field, trivially graded in g.
GradedAlgebra ground_field(const FieldSpec& k, const GradeGroup& g);

}  // namespace gradalg
