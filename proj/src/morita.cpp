#include "gradalg/detail/dense_algebra.hpp"
#include "gradalg/detail/sparse_echelon.hpp"
#include "gradalg/graded_module.hpp"

namespace gradalg {

using detail::DenseAlgebra;
using detail::SparseEchelon;

namespace {

// Basis of P = A^n(d): columns b_x e_j at j * m + x, degree deg b_x - d_j.
// Basis of Q = A^n(-d): rows b_x f_i at i * m + x, degree deg b_x + d_i.
template <ExactField K>
MoritaReport morita_impl(const GradedAlgebra& a, const std::vector<GroupElement>& d, K field) {
  using V = typename K::value_type;
  using Sparse = typename SparseEchelon<K>::Vec;
  DenseAlgebra<K> da(a, field);
  const auto& g = a.group();
  const std::size_t n = d.size(), m = a.dim(), big = n * m;
  const GradedAlgebra mat = matrix_shift(a, d);

  auto q_deg = [&](std::size_t i, std::size_t x) { return g.add(a.degree(x), d[i]); };
  auto p_deg = [&](std::size_t j, std::size_t y) { return g.sub(a.degree(y), d[j]); };
  auto idx = [&](std::size_t first, std::size_t second) { return first * big + second; };
  auto add_to = [&](Sparse& v, std::size_t k, const V& c) {
    if (field.is_zero(c)) return;
    auto [pos, fresh] = v.emplace(k, field.zero());
    pos->second = field.add(pos->second, c);
    if (field.is_zero(pos->second)) v.erase(pos);
  };
  // left[x][z] = b_x * z and right[z][y] = z * b_y for the generator list z
  std::vector<std::vector<V>> gens;
  gens.push_back(da.unit());
  for (std::size_t t = 0; t < m; ++t) gens.push_back(da.basis(t));

  MoritaReport rep;

  // Q (x)_M P, balanced over the algebra generators E_kl and b_t E_11 of M
  SparseEchelon<K> r1(field);
  std::vector<Sparse> rel1;
  auto push_rel1 = [&](std::size_t k, std::size_t l, const std::vector<V>& z) {
    std::vector<std::vector<V>> xz(m), zy(m);
    for (std::size_t x = 0; x < m; ++x) {
      xz[x] = da.mul(da.basis(x), z);
      zy[x] = da.mul(z, da.basis(x));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t y = 0; y < m; ++y) {
            Sparse v;
            if (i == k)
              for (std::size_t w = 0; w < m; ++w) add_to(v, idx(l * m + w, j * m + y), xz[x][w]);
            if (l == j)
              for (std::size_t w = 0; w < m; ++w) add_to(v, idx(i * m + x, k * m + w), field.neg(zy[y][w]));
            if (!v.empty()) rel1.push_back(std::move(v));
          }
  };
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) push_rel1(k, l, gens[0]);
  for (std::size_t t = 1; t < gens.size(); ++t) push_rel1(0, 0, gens[t]);
  for (const auto& v : rel1) r1.insert(v);
  rep.dim_qp = big * big - r1.dim();

  // theta(b_x f_i (x) b_y e_j) = delta_ij b_x b_y
  auto theta = [&](std::size_t t) {
    const std::size_t qi = t / big, pj = t % big;
    if (qi / m != pj / m) return da.zero();
    return da.mul(da.basis(qi % m), da.basis(pj % m));
  };
  auto theta_of = [&](const Sparse& v) {
    auto out = da.zero();
    for (const auto& [t, c] : v) out = da.add(out, da.scale(c, theta(t)));
    return out;
  };
  // sigma(b_x) = b_x f_1 (x) 1 e_1
  auto sigma = [&](const std::vector<V>& a_vec) {
    Sparse out;
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) add_to(out, idx(x, y), field.mul(a_vec[x], da.unit()[y]));
    return out;
  };

  rep.theta_well_defined = true;
  for (const auto& v : rel1)
    if (!da.is_zero(theta_of(v))) {
      rep.theta_well_defined = false;
      break;
    }
  rep.theta_sigma = true;
  for (std::size_t x = 0; x < m && rep.theta_sigma; ++x)
    rep.theta_sigma = theta_of(sigma(da.basis(x))) == da.basis(x);
  rep.sigma_theta = true;
  bool degrees = true;
  for (std::size_t t = 0; t < big * big; ++t) {
    Sparse diff = sigma(theta(t));
    add_to(diff, t, field.neg(field.one()));
    if (!r1.contains(diff)) rep.sigma_theta = false;
    const std::size_t qi = t / big, pj = t % big;
    auto deg = g.add(q_deg(qi / m, qi % m), p_deg(pj / m, pj % m));
    auto th = theta(t);
    for (std::size_t w = 0; w < m; ++w)
      if (!field.is_zero(th[w]) && a.degree(w) != deg) degrees = false;
  }
  for (std::size_t x = 0; x < m; ++x)
    for (const auto& [t, c] : sigma(da.basis(x))) {
      const std::size_t qi = t / big, pj = t % big;
      if (g.add(q_deg(qi / m, qi % m), p_deg(pj / m, pj % m)) != a.degree(x)) degrees = false;
    }

  // P (x)_A Q, balanced over the basis of A
  SparseEchelon<K> r2(field);
  std::vector<Sparse> rel2;
  for (std::size_t t = 0; t < m; ++t) {
    const auto& z = gens[t + 1];
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t y = 0; y < m; ++y) {
        auto yz = da.mul(da.basis(y), z);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t x = 0; x < m; ++x) {
            auto zx = da.mul(z, da.basis(x));
            Sparse v;
            for (std::size_t w = 0; w < m; ++w) {
              add_to(v, idx(j * m + w, i * m + x), yz[w]);
              add_to(v, idx(j * m + y, i * m + w), field.neg(zx[w]));
            }
            if (!v.empty()) rel2.push_back(std::move(v));
          }
      }
  }
  for (const auto& v : rel2) r2.insert(v);
  rep.dim_pq = big * big - r2.dim();

  // theta'(b_y e_j (x) b_x f_i) = b_y b_x E_ji
  const std::size_t md = mat.dim();
  auto theta_p = [&](std::size_t t) {
    const std::size_t pj = t / big, qi = t % big;
    std::vector<V> out(md, field.zero());
    auto prod = da.mul(da.basis(pj % m), da.basis(qi % m));
    for (std::size_t w = 0; w < m; ++w) out[matrix_index(n, m, pj / m, qi / m, w)] = prod[w];
    return out;
  };
  auto theta_p_of = [&](const Sparse& v) {
    std::vector<V> out(md, field.zero());
    for (const auto& [t, c] : v) {
      auto th = theta_p(t);
      for (std::size_t s = 0; s < md; ++s) field.fma(out[s], c, th[s]);
    }
    return out;
  };
  // sigma'(b_w E_ji) = b_w e_j (x) 1 f_i, extended linearly over the columns
  auto sigma_p = [&](const std::vector<V>& mu) {
    Sparse out;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t w = 0; w < m; ++w) {
          const auto& c = mu[matrix_index(n, m, j, i, w)];
          if (field.is_zero(c)) continue;
          for (std::size_t x = 0; x < m; ++x) add_to(out, idx(j * m + w, i * m + x), field.mul(c, da.unit()[x]));
        }
    return out;
  };
  auto unit_md = [&](std::size_t s) {
    std::vector<V> e(md, field.zero());
    e[s] = field.one();
    return e;
  };

  rep.theta_prime_well_defined = true;
  for (const auto& v : rel2) {
    auto th = theta_p_of(v);
    for (const auto& c : th)
      if (!field.is_zero(c)) rep.theta_prime_well_defined = false;
    if (!rep.theta_prime_well_defined) break;
  }
  rep.theta_prime_sigma_prime = true;
  for (std::size_t s = 0; s < md; ++s) {
    if (theta_p_of(sigma_p(unit_md(s))) != unit_md(s)) rep.theta_prime_sigma_prime = false;
    for (const auto& [t, c] : sigma_p(unit_md(s))) {
      const std::size_t pj = t / big, qi = t % big;
      if (g.add(p_deg(pj / m, pj % m), q_deg(qi / m, qi % m)) != mat.degree(s)) degrees = false;
    }
  }
  rep.sigma_prime_theta_prime = true;
  for (std::size_t t = 0; t < big * big; ++t) {
    auto th = theta_p(t);
    Sparse diff = sigma_p(th);
    add_to(diff, t, field.neg(field.one()));
    if (!r2.contains(diff)) rep.sigma_prime_theta_prime = false;
    const std::size_t pj = t / big, qi = t % big;
    auto deg = g.add(p_deg(pj / m, pj % m), q_deg(qi / m, qi % m));
    for (std::size_t s = 0; s < md; ++s)
      if (!field.is_zero(th[s]) && mat.degree(s) != deg) degrees = false;
  }
  rep.degrees_preserved = degrees;
  return rep;
}

}  // namespace

MoritaReport verify_morita_identities(const GradedAlgebra& a, const std::vector<GroupElement>& d) {
  if (d.empty()) throw DomainError("at least one shift is required");
  for (const auto& x : d)
    if (!a.group().contains(x)) throw StructuralError("shift outside the grade group");
  return with_field(a.field(), [&](auto K) { return morita_impl(a, d, K); });
}

}  // namespace gradalg
