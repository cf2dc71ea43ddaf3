#include "gradalg/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gradalg/algebra_file.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/int_matrix.hpp"

namespace gradalg {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<std::size_t>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw DomainError("a group has at least one element");
  // Latin square
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a].size() != n) throw DomainError("Cayley table is not square");
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] >= n || table_[b].size() != n || table_[b][a] >= n)
        throw DomainError("Cayley table entry out of range");
      row[table_[a][b]] = true;
      col[table_[b][a]] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() || std::find(col.begin(), col.end(), false) != col.end())
      throw DomainError("Cayley table is not a Latin square");
  }
  std::size_t id = n;
  for (std::size_t e = 0; e < n && id == n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) id = e;
  }
  if (id == n) throw DomainError("Cayley table has no identity");
  identity_ = id;
  if (n <= 24)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw DomainError("Cayley table is not associative");
}

std::size_t FiniteGroup::inv(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b)
    if (table_[a][b] == identity_) return b;
  throw StructuralError("element without inverse");
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

FiniteGroup FiniteGroup::from_permutations(std::string name, const std::vector<std::vector<std::size_t>>& gens) {
  using Perm = std::vector<std::size_t>;
  const std::size_t m = gens.empty() ? 0 : gens[0].size();
  Perm id(m);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [&](const Perm& a, const Perm& b) {
    Perm c(m);
    for (std::size_t x = 0; x < m; ++x) c[x] = a[b[x]];
    return c;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  for (std::size_t q = 0; q < elems.size(); ++q)
    for (const auto& g : gens) {
      auto c = compose(elems[q], g);
      if (index.emplace(c, elems.size()).second) elems.push_back(c);
    }
  std::vector<std::vector<std::size_t>> table(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup(std::move(name), std::move(table));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup("C" + std::to_string(n), std::move(t));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n < 3) {
    auto g = direct_product(cyclic(2), cyclic(n == 2 ? 2 : 1));
    return FiniteGroup("D" + std::to_string(n), g.table());
  }
  std::vector<std::size_t> r(n), s(n);
  for (std::size_t x = 0; x < n; ++x) {
    r[x] = (x + 1) % n;
    s[x] = (n - x) % n;
  }
  return from_permutations("D" + std::to_string(n), {r, s});
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n <= 1) return FiniteGroup("S" + std::to_string(n), {{0}});
  std::vector<std::size_t> t(n), c(n);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  for (std::size_t x = 0; x < n; ++x) c[x] = (x + 1) % n;
  return from_permutations("S" + std::to_string(n), {t, c});
}

FiniteGroup FiniteGroup::alternating(std::size_t n) {
  if (n < 3) return FiniteGroup("A" + std::to_string(n), {{0}});
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t s = 0; s + 2 < n; ++s) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    p[s] = s + 1;
    p[s + 1] = s + 2;
    p[s + 2] = s;
    gens.push_back(p);
  }
  return from_permutations("A" + std::to_string(n), gens);
}

FiniteGroup FiniteGroup::quaternion8() {
  // element 4*s + u encodes (-1)^s * unit u, with units 1, i, j, k
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      std::size_t ua = a % 4, ub = b % 4;
      std::size_t s = (a / 4 + b / 4 + sign[ua][ub]) % 2;
      t[a][b] = 4 * s + unit[ua][ub];
    }
  return FiniteGroup("Q8", std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order();
  std::vector<std::vector<std::size_t>> t(na * nb, std::vector<std::size_t>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y) t[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup(a.name() + "x" + b.name(), std::move(t));
}

std::vector<FiniteGroup> small_groups() {
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= 12; ++n) out.push_back(FiniteGroup::cyclic(n));
  out.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
  out.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)));
  out.push_back(FiniteGroup::direct_product(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
                                            FiniteGroup::cyclic(2)));
  out.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3)));
  out.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(6)));
  out.push_back(FiniteGroup::symmetric(3));
  out.push_back(FiniteGroup::dihedral(4));
  out.push_back(FiniteGroup::quaternion8());
  out.push_back(FiniteGroup::dihedral(5));
  out.push_back(FiniteGroup::alternating(4));
  out.push_back(FiniteGroup::dihedral(6));
  return out;
}

CenterCommutator group_center_and_commutator(const FiniteGroup& g) {
  CenterCommutator out;
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < n && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) out.center.push_back(a);
  }
  std::set<std::size_t> comm{g.identity()};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) comm.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  // closure under products
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> cur(comm.begin(), comm.end());
    for (auto x : cur)
      for (auto y : cur)
        if (comm.insert(g.mul(x, y)).second) grew = true;
  }
  out.commutator.assign(comm.begin(), comm.end());
  out.center_index = n / out.center.size();
  out.commutator_order = out.commutator.size();
  return out;
}

AbelianStructure abelian_structure(const FiniteGroup& g) {
  if (!g.is_abelian()) throw DomainError("abelian_structure requires an abelian group");
  const std::size_t n = g.order();
  // Z^n / relations  e_a + e_b - e_{ab}, e_1
  IntMatrix rel(n * n + 1, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t r = a * n + b;
      rel(r, a) += 1;
      rel(r, b) += 1;
      rel(r, g.mul(a, b)) -= 1;
    }
  rel(n * n, g.identity()) = 1;
  auto snf = smith_normal_form(rel);
  std::vector<long> torsion;
  std::vector<std::size_t> cols;
  for (std::size_t t = 0; t < snf.rank; ++t) {
    long d = snf.d(t, t).get_si();
    if (d > 1) {
      torsion.push_back(d);
      cols.push_back(t);
    }
  }
  AbelianStructure out{GradeGroup(0, torsion), {}};
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<long> c;
    for (auto t : cols) c.push_back(snf.v(a, t).get_si());
    out.image.push_back(out.group.element(std::move(c)));
  }
  return out;
}

GradedAlgebra group_algebra(const FieldSpec& k, const GradeGroup& h) {
  auto elems = h.elements();
  std::map<GroupElement, std::size_t> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  std::vector<BasisElement> basis;
  for (const auto& e : elems) basis.push_back({"g" + h.format(e), e});
  std::vector<StructureConstant> table;
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) table.push_back({a, b, pos.at(h.add(elems[a], elems[b])), 1});
  Element unit(elems.size(), 0);
  unit[pos.at(h.zero())] = 1;
  return GradedAlgebra(k, h, std::move(basis), std::move(table), std::move(unit))
      .with_provenance({{"kind", "group-algebra"}, {"field", k.name()}, {"grade_group", group_to_json(h)}});
}

GradedAlgebra group_algebra(const FieldSpec& k, const FiniteGroup& g) {
  const std::size_t n = g.order();
  GradeGroup group;
  std::vector<GroupElement> degs(n, group.zero());
  if (g.is_abelian()) {
    auto s = abelian_structure(g);
    group = s.group;
    degs = s.image;
  }
  std::vector<BasisElement> basis;
  for (std::size_t a = 0; a < n; ++a) basis.push_back({a == g.identity() ? "1" : "g" + std::to_string(a), degs[a]});
  std::vector<StructureConstant> table;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table.push_back({a, b, g.mul(a, b), 1});
  Element unit(n, 0);
  unit[g.identity()] = 1;
  return GradedAlgebra(k, group, std::move(basis), std::move(table), std::move(unit))
      .with_provenance({{"kind", "finite-group-algebra"},
                        {"field", k.name()},
                        {"group", {{"name", g.name()}, {"table", g.table()}}}});
}

Cocycle normalize_cocycle(const FieldSpec& k, Cocycle c) {
  const auto& g = c.group;
  if (!g.is_finite()) throw DomainError("cocycles are defined on finite groups");
  auto elems = g.elements();
  const std::size_t n = elems.size();
  if (c.values.size() != n * n) throw DomainError("cocycle table has the wrong size");
  for (auto& v : c.values) {
    v = k.normalize(v);
    if (v == 0) throw DomainError("cocycle values must be nonzero");
  }
  // dividing by the constant coboundary alpha(0,0)
  const mpq_class c00 = c.values[0];
  for (auto& v : c.values) v = k.normalize(v / c00);
  std::map<GroupElement, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[elems[i]] = i;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) {
        std::size_t ab = pos.at(g.add(elems[a], elems[b]));
        std::size_t bd = pos.at(g.add(elems[b], elems[d]));
        mpq_class lhs = k.normalize(c(a, b) * c(ab, d));
        mpq_class rhs = k.normalize(c(b, d) * c(a, bd));
        if (lhs != rhs)
          throw DomainError("cocycle identity fails at (" + g.format(elems[a]) + ", " + g.format(elems[b]) + ", " +
                            g.format(elems[d]) + ")");
      }
  return c;
}

GradedAlgebra twisted_group_algebra(const FieldSpec& k, const Cocycle& alpha) {
  Cocycle c = normalize_cocycle(k, alpha);
  const auto& g = c.group;
  auto elems = g.elements();
  std::map<GroupElement, std::size_t> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;
  std::vector<BasisElement> basis;
  for (const auto& e : elems) basis.push_back({"u" + g.format(e), e});
  std::vector<StructureConstant> table;
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) table.push_back({a, b, pos.at(g.add(elems[a], elems[b])), c(a, b)});
  Element unit(elems.size(), 0);
  unit[0] = 1;
  Json values = Json::array();
  for (const auto& v : c.values) values.push_back(rational_to_json(v));
  return GradedAlgebra(k, g, std::move(basis), std::move(table), std::move(unit))
      .with_provenance({{"kind", "twisted"}, {"field", k.name()}, {"grade_group", group_to_json(g)}, {"cocycle", values}});
}

namespace {

// Quaternion units 1, i, j, k as Z2 x Z2 element positions in lexicographic order.
constexpr std::size_t kQuatPos[4] = {0, 2, 1, 3};

// u_x u_y = alpha(x, y) u_{x+y} for x, y in {1, i, j, k}.
std::array<std::array<mpq_class, 4>, 4> quaternion_alpha(const mpq_class& a, const mpq_class& b) {
  std::array<std::array<mpq_class, 4>, 4> t;
  for (auto& r : t) r.fill(1);
  t[1][1] = a;
  t[2][2] = b;
  t[3][3] = -a * b;
  t[1][2] = 1;
  t[2][1] = -1;
  t[1][3] = a;
  t[3][1] = -a;
  t[2][3] = -b;
  t[3][2] = b;
  return t;
}

}  // namespace

Cocycle quaternion_cocycle(const FieldSpec& k, const mpq_class& a, const mpq_class& b) {
  GradeGroup g(0, {2, 2});
  auto t = quaternion_alpha(a, b);
  Cocycle c{g, std::vector<mpq_class>(16)};
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) c.values[kQuatPos[x] * 4 + kQuatPos[y]] = k.normalize(t[x][y]);
  return c;
}

GradedAlgebra quaternion_algebra(const FieldSpec& k, const mpq_class& a, const mpq_class& b) {
  if (!k.is_rational() && k.characteristic == 2)
    throw UnsupportedError("quaternion algebras in characteristic 2 are not supported");
  if (k.normalize(a) == 0 || k.normalize(b) == 0) throw DomainError("quaternion parameters must be nonzero");
  GradeGroup g(0, {2, 2});
  std::vector<BasisElement> basis = {{"1", g.element({0, 0})},
                                     {"i", g.element({1, 0})},
                                     {"j", g.element({0, 1})},
                                     {"k", g.element({1, 1})}};
  auto t = quaternion_alpha(a, b);
  // x + y in Z2 x Z2 on the unit labels 0..3 is bitwise xor with i = 1, j = 2, k = 3
  std::vector<StructureConstant> table;
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) table.push_back({x, y, x ^ y, t[x][y]});
  return GradedAlgebra(k, g, std::move(basis), std::move(table), {1, 0, 0, 0})
      .with_provenance({{"kind", "quaternion"},
                        {"field", k.name()},
                        {"a", rational_to_json(k.normalize(a))},
                        {"b", rational_to_json(k.normalize(b))}});
}

GradedAlgebra regrade(const GradedAlgebra& a, const GradeGroup& target, const std::vector<GroupElement>& images) {
  const auto& src = a.group();
  if (images.size() != src.rank()) throw DomainError("regrade needs one image per generator");
  for (std::size_t t = 0; t < src.torsion().size(); ++t)
    if (target.scale(src.torsion()[t], images[src.free_rank() + t]) != target.zero())
      throw DomainError("regrade images do not define a homomorphism");
  std::vector<BasisElement> basis;
  for (const auto& b : a.basis()) {
    GroupElement d = target.zero();
    for (std::size_t i = 0; i < b.degree.coords.size(); ++i)
      d = target.add(d, target.scale(b.degree.coords[i], images[i]));
    basis.push_back({b.name, d});
  }
  GradedAlgebra out(a.field(), target, std::move(basis), a.table(), a.unit());
  if (a.base()) out = out.with_base(*a.base());
  Json imgs = Json::array();
  for (const auto& x : images) imgs.push_back(x.coords);
  return out.with_provenance(
      {{"kind", "regrade"}, {"grade_group", group_to_json(target)}, {"images", imgs}, {"algebra", to_json(a)}});
}

GradedAlgebra upper_triangular(const FieldSpec& k, const GradeGroup& g, const GroupElement& d) {
  std::vector<BasisElement> basis = {{"E11", g.zero()}, {"E12", d}, {"E22", g.zero()}};
  std::vector<StructureConstant> table = {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}};
  return GradedAlgebra(k, g, std::move(basis), std::move(table), {1, 0, 1})
      .with_provenance(
          {{"kind", "upper-triangular"}, {"field", k.name()}, {"grade_group", group_to_json(g)}, {"degree", d.coords}});
}

GradedAlgebra split_product(const FieldSpec& k, const GradeGroup& g, std::size_t copies) {
  std::vector<BasisElement> basis;
  std::vector<StructureConstant> table;
  for (std::size_t i = 0; i < copies; ++i) {
    basis.push_back({"e" + std::to_string(i + 1), g.zero()});
    table.push_back({i, i, i, 1});
  }
  return GradedAlgebra(k, g, std::move(basis), std::move(table), Element(copies, 1))
      .with_provenance(
          {{"kind", "split-product"}, {"field", k.name()}, {"grade_group", group_to_json(g)}, {"copies", copies}});
}

GradedAlgebra ground_field(const FieldSpec& k, const GradeGroup& g) {
  return GradedAlgebra(k, g, {{"1", g.zero()}}, {{0, 0, 0, 1}}, {1})
      .with_provenance({{"kind", "ground-field"}, {"field", k.name()}, {"grade_group", group_to_json(g)}});
}

}  // namespace gradalg
