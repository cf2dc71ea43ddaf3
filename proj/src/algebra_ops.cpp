#include <functional>
#include <memory>

#include "gradalg/algebra_file.hpp"
#include "gradalg/detail/dense_algebra.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/graded_algebra.hpp"

namespace gradalg {

using detail::DenseAlgebra;

namespace {

template <ExactField K>
struct Quotient {
  GradedAlgebra algebra;
  std::function<Element(const std::vector<typename K::value_type>&)> project;
};

template <ExactField K>
Quotient<K> quotient_impl(const GradedAlgebra& a, const DenseAlgebra<K>& d,
                          const std::vector<std::vector<typename K::value_type>>& ideal, bool graded) {
  const std::size_t n = a.dim();
  auto span = std::make_shared<EchelonBasis<K>>(d.field(), n);
  for (const auto& v : ideal) span->insert(v);
  std::vector<bool> pivot(n, false);
  for (auto p : span->pivots()) pivot[p] = true;
  auto complement = std::make_shared<std::vector<std::size_t>>();
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) complement->push_back(i);
  const std::size_t q = complement->size();
  const K field = d.field();

  auto project = [span, complement, field](const std::vector<typename K::value_type>& v) {
    auto r = span->reduce(v);
    Element out(complement->size());
    for (std::size_t t = 0; t < complement->size(); ++t) out[t] = field.to_rational(r[(*complement)[t]]);
    return out;
  };

  GradeGroup group = graded ? a.group() : GradeGroup::trivial();
  std::vector<BasisElement> basis;
  for (auto c : *complement) basis.push_back({a.basis()[c].name, graded ? a.degree(c) : group.zero()});
  std::vector<StructureConstant> table;
  for (std::size_t s = 0; s < q; ++s)
    for (std::size_t t = 0; t < q; ++t) {
      auto prod = project(d.mul(d.basis((*complement)[s]), d.basis((*complement)[t])));
      for (std::size_t u = 0; u < q; ++u)
        if (prod[u] != 0) table.push_back({s, t, u, prod[u]});
    }
  GradedAlgebra out(a.field(), group, std::move(basis), std::move(table), project(d.unit()));
  return {std::move(out), project};
}

void require_same_setting(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (!(a.field() == b.field())) throw StructuralError("algebras over different fields");
  if (!(a.group() == b.group())) throw StructuralError("algebras graded by different groups");
}

}  // namespace

GradedAlgebra subalgebra(const GradedAlgebra& a, const std::vector<Element>& basis, const std::string& prefix) {
  return with_field(a.field(), [&](auto K) {
    using F = decltype(K);
    DenseAlgebra<F> d(a, K);
    std::vector<std::vector<typename F::value_type>> vecs;
    for (const auto& e : basis) vecs.push_back(d.to_vec(e));
    detail::Coordinates<F> coords(K, a.dim(), vecs);
    std::vector<BasisElement> be;
    for (std::size_t p = 0; p < basis.size(); ++p) {
      auto deg = a.homogeneous_degree(basis[p]);
      if (!deg) throw DomainError("subalgebra basis element is not homogeneous");
      be.push_back({prefix + std::to_string(p), *deg});
    }
    std::vector<StructureConstant> table;
    for (std::size_t p = 0; p < vecs.size(); ++p)
      for (std::size_t q = 0; q < vecs.size(); ++q) {
        auto c = coords.of(d.mul(vecs[p], vecs[q]));
        if (!c) throw DomainError("subspace is not closed under multiplication");
        for (std::size_t r = 0; r < c->size(); ++r)
          if (!K.is_zero((*c)[r])) table.push_back({p, q, r, K.to_rational((*c)[r])});
      }
    auto u = coords.of(d.unit());
    if (!u) throw DomainError("subspace does not contain the unit");
    Element unit(u->size());
    for (std::size_t r = 0; r < u->size(); ++r) unit[r] = K.to_rational((*u)[r]);
    return GradedAlgebra(a.field(), a.group(), std::move(be), std::move(table), std::move(unit));
  });
}

GradedAlgebra quotient_algebra(const GradedAlgebra& a, const std::vector<Element>& ideal, bool graded) {
  return with_field(a.field(), [&](auto K) {
    using F = decltype(K);
    DenseAlgebra<F> d(a, K);
    std::vector<std::vector<typename F::value_type>> vecs;
    for (const auto& e : ideal) vecs.push_back(d.to_vec(e));
    return quotient_impl(a, d, vecs, graded).algebra;
  });
}

GradedAlgebra degree_zero_part(const GradedAlgebra& a) {
  std::vector<std::size_t> idx;
  std::vector<long> pos(a.dim(), -1);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.degree(i) == a.group().zero()) {
      pos[i] = static_cast<long>(idx.size());
      idx.push_back(i);
    }
  std::vector<BasisElement> basis;
  for (auto i : idx) basis.push_back(a.basis()[i]);
  std::vector<StructureConstant> table;
  for (const auto& s : a.table())
    if (pos[s.i] >= 0 && pos[s.j] >= 0) {
      if (pos[s.k] < 0) throw StructuralError("degree-zero product leaves the degree-zero component");
      table.push_back({static_cast<std::size_t>(pos[s.i]), static_cast<std::size_t>(pos[s.j]),
                       static_cast<std::size_t>(pos[s.k]), s.value});
    }
  Element unit;
  for (auto i : idx) unit.push_back(a.unit()[i]);
  return GradedAlgebra(a.field(), a.group(), std::move(basis), std::move(table), std::move(unit));
}

GradedAlgebra base_algebra(const GradedAlgebra& a) { return subalgebra(a, a.base_or_ground().elements, "r"); }

GradedAlgebra opposite(const GradedAlgebra& a) {
  std::vector<StructureConstant> table;
  for (const auto& s : a.table()) table.push_back({s.j, s.i, s.k, s.value});
  GradedAlgebra out(a.field(), a.group(), a.basis(), std::move(table), a.unit());
  if (a.base()) out = out.with_base(*a.base());
  return out.with_provenance({{"kind", "opposite"}, {"algebra", to_json(a)}});
}

GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b) {
  require_same_setting(a, b);
  const std::size_t nb = b.dim();
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < nb; ++j)
      basis.push_back({a.basis()[i].name + "(x)" + b.basis()[j].name, a.group().add(a.degree(i), b.degree(j))});
  std::vector<StructureConstant> table;
  for (const auto& s : a.table())
    for (const auto& t : b.table())
      table.push_back({s.i * nb + t.i, s.j * nb + t.j, s.k * nb + t.k, s.value * t.value});
  Element unit(a.dim() * nb);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
  return GradedAlgebra(a.field(), a.group(), std::move(basis), std::move(table), std::move(unit))
      .with_provenance({{"kind", "tensor"}, {"left", to_json(a)}, {"right", to_json(b)}});
}

GradedAlgebra tensor_product_over_base(const GradedAlgebra& a, const GradedAlgebra& b) {
  require_same_setting(a, b);
  auto ra = a.base_or_ground().elements;
  auto rb = b.base_or_ground().elements;
  if (ra.size() != rb.size()) throw DomainError("designated bases have different dimensions");
  if (!base_algebra(a).same_table(base_algebra(b)))
    throw DomainError("designated bases do not match generator by generator");
  for (const auto& [alg, base] : {std::pair{&a, &ra}, std::pair{&b, &rb}})
    for (const auto& r : *base)
      for (std::size_t i = 0; i < alg->dim(); ++i) {
        auto x = alg->basis_element(i);
        if (alg->multiply(r, x) != alg->multiply(x, r)) throw DomainError("base is not central");
      }
  GradedAlgebra t = tensor_product(a, b);
  const std::size_t na = a.dim(), nb = b.dim();
  return with_field(a.field(), [&](auto K) {
    using F = decltype(K);
    DenseAlgebra<F> dt(t, K);
    DenseAlgebra<F> da(a, K);
    DenseAlgebra<F> db(b, K);
    std::vector<std::vector<typename F::value_type>> rel;
    for (std::size_t l = 0; l < ra.size(); ++l) {
      auto rav = da.to_vec(ra[l]);
      auto rbv = db.to_vec(rb[l]);
      for (std::size_t i = 0; i < na; ++i) {
        auto ar = da.mul(da.basis(i), rav);
        for (std::size_t j = 0; j < nb; ++j) {
          auto rbj = db.mul(rbv, db.basis(j));
          auto v = dt.zero();
          for (std::size_t x = 0; x < na; ++x) v[x * nb + j] = K.add(v[x * nb + j], ar[x]);
          for (std::size_t y = 0; y < nb; ++y) v[i * nb + y] = K.sub(v[i * nb + y], rbj[y]);
          if (!dt.is_zero(v)) rel.push_back(std::move(v));
        }
      }
    }
    auto q = quotient_impl(t, dt, rel, true);
    DesignatedBase base;
    for (const auto& r : ra) {
      auto v = dt.zero();
      auto rv = da.to_vec(r);
      auto ub = db.to_vec(b.unit());
      for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nb; ++y) v[x * nb + y] = K.mul(rv[x], ub[y]);
      base.elements.push_back(q.project(v));
    }
    return q.algebra.with_base(std::move(base))
        .with_provenance({{"kind", "tensor-over-base"}, {"left", to_json(a)}, {"right", to_json(b)}});
  });
}

GradedAlgebra matrix_shift(const GradedAlgebra& a, const std::vector<GroupElement>& shifts) {
  const auto& g = a.group();
  for (const auto& d : shifts)
    if (!g.contains(d)) throw StructuralError("shift " + g.format(d) + " lies outside " + g.describe());
  const std::size_t n = shifts.size();
  const std::size_t m = a.dim();
  if (n == 0) throw DomainError("matrix_shift needs at least one shift");
  std::vector<BasisElement> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t x = 0; x < m; ++x) {
        std::string e = "E" + std::to_string(i + 1) + std::to_string(j + 1);
        std::string name = (m == 1 && a.basis()[x].name == "1") ? e : a.basis()[x].name + "*" + e;
        basis.push_back({name, g.add(g.sub(a.degree(x), shifts[i]), shifts[j])});
      }
  std::vector<StructureConstant> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (const auto& s : a.table())
          table.push_back({matrix_index(n, m, i, j, s.i), matrix_index(n, m, j, l, s.j), matrix_index(n, m, i, l, s.k),
                           s.value});
  Element unit(n * n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = 0; x < m; ++x) unit[matrix_index(n, m, i, i, x)] = a.unit()[x];
  GradedAlgebra out(a.field(), g, std::move(basis), std::move(table), std::move(unit));
  if (a.base()) {
    DesignatedBase base;
    for (const auto& r : a.base()->elements) {
      Element v(n * n * m);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < m; ++x) v[matrix_index(n, m, i, i, x)] = r[x];
      base.elements.push_back(std::move(v));
    }
    out = out.with_base(std::move(base));
  }
  Json sh = Json::array();
  for (const auto& d : shifts) sh.push_back(d.coords);
  return out.with_provenance({{"kind", "matrix-shift"}, {"shifts", sh}, {"algebra", to_json(a)}});
}

}  // namespace gradalg
