#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradalg/int_matrix.hpp"

namespace gradalg {

// An element of Z^f x Z_{n_1} x ... x Z_{n_t}; torsion coordinates kept in [0, n_i).
struct GroupElement {
  std::vector<long> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Finitely generated abelian group Z^f x Z_{n_1} x ... x Z_{n_t} with every n_i >= 2.
class GradeGroup {
 public:
  GradeGroup() = default;
  GradeGroup(std::size_t free_rank, std::vector<long> torsion);

  static GradeGroup trivial() { return {}; }
  static GradeGroup cyclic(long n) { return n == 0 ? GradeGroup(1, {}) : GradeGroup(0, {n}); }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<long>& torsion() const { return torsion_; }
  std::size_t rank() const { return free_rank_ + torsion_.size(); }
  bool is_finite() const { return free_rank_ == 0; }
  // Group order; nullopt when infinite.
  std::optional<std::uint64_t> order() const;

  // Builds an element, reducing torsion coordinates.
  GroupElement element(std::vector<long> coords) const;
  GroupElement zero() const { return GroupElement{std::vector<long>(rank(), 0)}; }
  // Basis vector e_i.
  GroupElement generator(std::size_t i) const;

  bool contains(const GroupElement& x) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(long k, const GroupElement& a) const;

  // All elements in lexicographic order; finite groups only.
  std::vector<GroupElement> elements() const;

  std::string format(const GroupElement& x) const;
  std::string describe() const;

  friend bool operator==(const GradeGroup&, const GradeGroup&) = default;

 private:
  void check(const GroupElement& x) const;

  std::size_t free_rank_ = 0;
  std::vector<long> torsion_;
};

// Subgroup with a canonical Hermite basis of its preimage lattice in Z^{f+t}.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(const GradeGroup& parent, std::vector<GroupElement> generators);

  const GradeGroup& parent() const { return parent_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  // Hermite basis rows of the preimage lattice (includes torsion relations).
  const IntMatrix& canonical_basis() const { return hnf_.h; }

  bool contains(const GroupElement& x) const;
  // Canonical representative of x + S.
  GroupElement reduce(const GroupElement& x) const;
  bool congruent(const GroupElement& a, const GroupElement& b) const;

  // Index [parent : S]; nullopt when infinite.
  std::optional<std::uint64_t> index() const;
  bool is_finite() const;
  // Elements of S; requires S finite.
  std::vector<GroupElement> elements() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.hnf_.h == b.hnf_.h;
  }

 private:
  GradeGroup parent_;
  std::vector<GroupElement> generators_;
  HermiteForm hnf_;
};

bool subgroup_membership(const Subgroup& s, const GroupElement& x);

struct CosetSpace {
  GradeGroup parent;
  Subgroup subgroup;
  std::vector<GroupElement> representatives;

  // Position of the coset of x among representatives.
  std::size_t index_of(const GroupElement& x) const;
};

// Throws UnsupportedError when the index is infinite.
CosetSpace coset_space(const GradeGroup& g, const Subgroup& s);

}  // namespace gradalg
