#include "gradalg/grade_group.hpp"

#include <algorithm>
#include <set>

#include "gradalg/errors.hpp"

namespace gradalg {

namespace {

long mod_floor(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

GradeGroup::GradeGroup(std::size_t free_rank, std::vector<long> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (long n : torsion_)
    if (n < 2) throw DomainError("torsion orders must be at least 2, got " + std::to_string(n));
}

std::optional<std::uint64_t> GradeGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  std::uint64_t n = 1;
  for (long t : torsion_) n *= static_cast<std::uint64_t>(t);
  return n;
}

GroupElement GradeGroup::element(std::vector<long> coords) const {
  if (coords.size() != rank())
    throw StructuralError("element of length " + std::to_string(coords.size()) + " in a group of rank " +
                          std::to_string(rank()));
  for (std::size_t i = 0; i < torsion_.size(); ++i)
    coords[free_rank_ + i] = mod_floor(coords[free_rank_ + i], torsion_[i]);
  return GroupElement{std::move(coords)};
}

GroupElement GradeGroup::generator(std::size_t i) const {
  std::vector<long> c(rank(), 0);
  c.at(i) = 1;
  return element(std::move(c));
}

bool GradeGroup::contains(const GroupElement& x) const {
  if (x.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    long v = x.coords[free_rank_ + i];
    if (v < 0 || v >= torsion_[i]) return false;
  }
  return true;
}

void GradeGroup::check(const GroupElement& x) const {
  if (!contains(x)) throw StructuralError("element " + format(x) + " does not belong to " + describe());
}

GroupElement GradeGroup::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  std::vector<long> c(rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return element(std::move(c));
}

GroupElement GradeGroup::neg(const GroupElement& a) const {
  check(a);
  std::vector<long> c(rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords[i];
  return element(std::move(c));
}

GroupElement GradeGroup::sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

GroupElement GradeGroup::scale(long k, const GroupElement& a) const {
  check(a);
  std::vector<long> c(rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * a.coords[i];
  return element(std::move(c));
}

std::vector<GroupElement> GradeGroup::elements() const {
  if (!is_finite()) throw UnsupportedError("cannot enumerate the infinite group " + describe());
  std::vector<GroupElement> out;
  std::vector<long> c(rank(), 0);
  while (true) {
    out.push_back(GroupElement{c});
    std::size_t i = c.size();
    while (i > 0) {
      --i;
      if (++c[i] < torsion_[i]) break;
      c[i] = 0;
      if (i == 0) return out;
    }
    if (c.empty()) return out;
  }
}

std::string GradeGroup::format(const GroupElement& x) const {
  if (x.coords.size() == 1) return std::to_string(x.coords[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x.coords[i]);
  }
  return s + ")";
}

std::string GradeGroup::describe() const {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < free_rank_; ++i) parts.push_back("Z");
  for (long n : torsion_) parts.push_back("Z" + std::to_string(n));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += "x" + parts[i];
  return s;
}

Subgroup::Subgroup(const GradeGroup& parent, std::vector<GroupElement> generators)
    : parent_(parent), generators_(std::move(generators)) {
  const std::size_t r = parent_.rank();
  const std::size_t f = parent_.free_rank();
  IntMatrix m(generators_.size() + parent_.torsion().size(), r);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!parent_.contains(generators_[i]))
      throw StructuralError("subgroup generator " + parent_.format(generators_[i]) + " lies outside " +
                            parent_.describe());
    for (std::size_t j = 0; j < r; ++j) m(i, j) = generators_[i].coords[j];
  }
  for (std::size_t t = 0; t < parent_.torsion().size(); ++t)
    m(generators_.size() + t, f + t) = parent_.torsion()[t];
  hnf_ = hermite_normal_form(m);
}

GroupElement Subgroup::reduce(const GroupElement& x) const {
  if (!parent_.contains(x)) throw StructuralError("element outside the parent group");
  std::vector<mpz_class> v(x.coords.begin(), x.coords.end());
  for (std::size_t row = 0; row < hnf_.pivots.size(); ++row) {
    const std::size_t c = hnf_.pivots[row];
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v[c].get_mpz_t(), hnf_.h(row, c).get_mpz_t());
    if (q == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * hnf_.h(row, j);
  }
  std::vector<long> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_si();
  return parent_.element(std::move(out));
}

bool Subgroup::contains(const GroupElement& x) const { return reduce(x) == parent_.zero(); }

bool Subgroup::congruent(const GroupElement& a, const GroupElement& b) const {
  return contains(parent_.sub(a, b));
}

std::optional<std::uint64_t> Subgroup::index() const {
  if (hnf_.pivots.size() < parent_.rank()) return std::nullopt;
  std::uint64_t n = 1;
  for (std::size_t row = 0; row < hnf_.pivots.size(); ++row) n *= hnf_.h(row, hnf_.pivots[row]).get_ui();
  return n;
}

bool Subgroup::is_finite() const {
  for (const auto& g : generators_)
    for (std::size_t i = 0; i < parent_.free_rank(); ++i)
      if (g.coords[i] != 0) return false;
  return true;
}

std::vector<GroupElement> Subgroup::elements() const {
  if (!is_finite()) throw UnsupportedError("cannot enumerate an infinite subgroup");
  std::set<GroupElement> seen{parent_.zero()};
  std::vector<GroupElement> frontier{parent_.zero()};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& g : generators_) {
        auto y = parent_.add(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

bool subgroup_membership(const Subgroup& s, const GroupElement& x) { return s.contains(x); }

std::size_t CosetSpace::index_of(const GroupElement& x) const {
  auto r = subgroup.reduce(x);
  auto it = std::lower_bound(representatives.begin(), representatives.end(), r);
  if (it == representatives.end() || *it != r) throw StructuralError("coset representative not found");
  return static_cast<std::size_t>(it - representatives.begin());
}

CosetSpace coset_space(const GradeGroup& g, const Subgroup& s) {
  if (!(s.parent() == g)) throw StructuralError("subgroup of a different group");
  auto idx = s.index();
  if (!idx) throw UnsupportedError("infinite index: coset enumeration unsupported");
  const auto& h = s.canonical_basis();
  const std::size_t r = g.rank();
  // pivots are all columns in order: the box 0 <= x_c < h_cc
  std::vector<long> bounds(r);
  for (std::size_t c = 0; c < r; ++c) bounds[c] = h(c, c).get_si();
  std::vector<GroupElement> reps;
  std::vector<long> x(r, 0);
  if (r == 0) {
    reps.push_back(g.zero());
  } else {
    while (true) {
      reps.push_back(s.reduce(g.element(x)));
      std::size_t i = r;
      bool done = true;
      while (i > 0) {
        --i;
        if (++x[i] < bounds[i]) {
          done = false;
          break;
        }
        x[i] = 0;
      }
      if (done) break;
    }
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  if (reps.size() != *idx) throw StructuralError("coset enumeration disagrees with the index");
  return {g, s, std::move(reps)};
}

}  // namespace gradalg
