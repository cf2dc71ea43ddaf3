#include <numeric>

#include "gradalg/detail/dense_algebra.hpp"

namespace gradalg::detail {

namespace {

template <ExactField K>
std::vector<typename K::value_type> trace_vector(const DenseAlgebra<K>& a) {
  const K& f = a.field();
  std::vector<typename K::value_type> t(a.dim(), f.zero());
  for (std::size_t m = 0; m < a.dim(); ++m)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.product(m, j))
        if (k == j) t[m] = f.add(t[m], c);
  return t;
}

// Kernel of the trace form Tr(L_{b_k b_j}).
template <ExactField K>
std::vector<std::vector<typename K::value_type>> trace_form_kernel(const DenseAlgebra<K>& a) {
  const K& f = a.field();
  const std::size_t n = a.dim();
  auto t = trace_vector(a);
  Matrix<K> form(f, n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [m, c] : a.product(k, j)) f.fma(form(k, j), c, t[m]);
  return kernel_basis(form);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

using IntMat = std::vector<std::uint64_t>;

IntMat matmul_mod(const IntMat& x, const IntMat& y, std::size_t n, std::uint64_t m) {
  IntMat z(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto a = x[i * n + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto b = y[k * n + j];
        if (b == 0) continue;
        z[i * n + j] = (z[i * n + j] + mulmod(a, b, m)) % m;
      }
    }
  return z;
}

// Tr(L^{p^i}) / p^i mod p for the integer lift L of an F_p matrix.
std::uint64_t scaled_power_trace(const Matrix<PrimeField>& l, std::uint64_t p, unsigned i) {
  const std::size_t n = l.rows();
  std::uint64_t pi = 1;
  for (unsigned s = 0; s < i; ++s) pi *= p;
  const std::uint64_t mod = pi * p;
  IntMat cur(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) cur[r * n + c] = l(r, c);
  // raise to the p-th power i times
  for (unsigned s = 0; s < i; ++s) {
    IntMat acc = cur;
    for (std::uint64_t e = 1; e < p; ++e) acc = matmul_mod(acc, cur, n, mod);
    cur = std::move(acc);
  }
  std::uint64_t tr = 0;
  for (std::size_t r = 0; r < n; ++r) tr = (tr + cur[r * n + r]) % mod;
  if (tr % pi != 0) throw StructuralError("trace not divisible by p^i in radical computation");
  return (tr / pi) % p;
}

template <ExactField K>
std::vector<typename K::value_type> crt_idempotent_poly_eval(const DenseAlgebra<K>& a, const Factorization<K>& fac,
                                                             const Poly<K>& mu, std::size_t which,
                                                             const std::vector<typename K::value_type>& x,
                                                             const std::vector<typename K::value_type>& unity) {
  const K& f = a.field();
  Poly<K> pk = Poly<K>::constant(f, f.one());
  for (unsigned r = 0; r < fac.factors[which].second; ++r) pk = pk * fac.factors[which].first;
  Poly<K> q = mu / pk;
  auto [g, s, t] = extended_gcd(q, pk);
  (void)t;
  if (g.degree() != 0) throw StructuralError("non-coprime factors in idempotent splitting");
  Poly<K> e = (s * q) % mu;
  return a.evaluate(e, x, unity);
}

template <ExactField K>
std::vector<std::vector<typename K::value_type>> split_by(const DenseAlgebra<K>& a,
                                                          const std::vector<typename K::value_type>& x,
                                                          const std::vector<typename K::value_type>& unity) {
  auto mu = a.min_poly(x, unity);
  auto fac = factor(mu);
  std::vector<std::vector<typename K::value_type>> out;
  if (fac.factors.size() <= 1) {
    out.push_back(unity);
    return out;
  }
  for (std::size_t i = 0; i < fac.factors.size(); ++i) out.push_back(crt_idempotent_poly_eval(a, fac, mu, i, x, unity));
  return out;
}

}  // namespace

std::vector<std::vector<mpq_class>> jacobson_radical(const DenseAlgebra<Rationals>& a) { return trace_form_kernel(a); }

std::vector<std::vector<std::uint64_t>> jacobson_radical(const DenseAlgebra<PrimeField>& a) {
  const PrimeField& f = a.field();
  const std::uint64_t p = f.p;
  const std::size_t n = a.dim();
  if (n == 0) return {};
  unsigned l = 0;
  for (std::uint64_t pw = p; pw <= n; pw *= p) ++l;

  // I_0 from the ordinary trace form
  auto ideal = trace_form_kernel(a);
  for (unsigned i = 1; i <= l && !ideal.empty(); ++i) {
    Matrix<PrimeField> g(f, n, ideal.size());
    for (std::size_t k = 0; k < ideal.size(); ++k)
      for (std::size_t j = 0; j < n; ++j) {
        auto prod = a.mul(ideal[k], a.basis(j));
        g(j, k) = scaled_power_trace(a.left_matrix(prod), p, i);
      }
    auto ker = kernel_basis(g);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& lam : ker) {
      std::vector<std::uint64_t> v(n, 0);
      for (std::size_t k = 0; k < ideal.size(); ++k)
        for (std::size_t c = 0; c < n; ++c) f.fma(v[c], lam[k], ideal[k][c]);
      next.push_back(std::move(v));
    }
    ideal = std::move(next);
  }
  return ideal;
}

std::vector<std::vector<std::uint64_t>> primitive_idempotents(const DenseAlgebra<PrimeField>& a,
                                                              const std::vector<std::vector<std::uint64_t>>& basis,
                                                              const std::vector<std::uint64_t>& unity) {
  const PrimeField& f = a.field();
  const std::size_t m = basis.size();
  Coordinates<PrimeField> coords(f, a.dim(), basis);
  // Frobenius fixed points form a split semisimple subalgebra F_p^r, r = number of blocks.
  Matrix<PrimeField> frob(f, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    auto c = coords.at(a.power(basis[i], f.p, unity));
    for (std::size_t r = 0; r < m; ++r) frob(r, i) = c[r];
    frob(i, i) = f.sub(frob(i, i), 1);
  }
  std::vector<std::vector<std::uint64_t>> fixed;
  for (const auto& lam : kernel_basis(frob)) {
    std::vector<std::uint64_t> v(a.dim(), 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c = 0; c < a.dim(); ++c) f.fma(v[c], lam[i], basis[i][c]);
    fixed.push_back(std::move(v));
  }
  const std::size_t target = fixed.size();
  std::vector<std::vector<std::uint64_t>> idems{unity};
  for (const auto& b : fixed) {
    if (idems.size() == target) break;
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& e : idems)
      for (auto& piece : split_by(a, a.mul(e, b), e)) next.push_back(std::move(piece));
    idems = std::move(next);
  }
  if (idems.size() != target) throw StructuralError("idempotent splitting did not reach the block count");
  return idems;
}

std::vector<std::vector<mpq_class>> primitive_idempotents(const DenseAlgebra<Rationals>& a,
                                                          const std::vector<std::vector<mpq_class>>& basis,
                                                          const std::vector<mpq_class>& unity) {
  const Rationals f;
  const std::size_t m = basis.size();
  Coordinates<Rationals> coords(f, a.dim(), basis);
  // radical of C from its own trace form
  std::vector<std::vector<mpq_class>> mult(m * m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < m; ++j) mult[k * m + j] = coords.at(a.mul(basis[k], basis[j]));
  std::vector<mpq_class> tr(m, 0);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < m; ++j) tr[k] += mult[k * m + j][j];
  Matrix<Rationals> form(f, m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l) form(k, j) += mult[k * m + j][l] * tr[l];
  const std::size_t target = m - kernel_basis(form).size();

  for (long t = 1; t <= static_cast<long>(4 * m + 16); ++t) {
    std::vector<mpq_class> x(a.dim(), 0);
    mpq_class w = 1;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t c = 0; c < a.dim(); ++c) x[c] += w * basis[i][c];
      w *= t;
    }
    auto mu = a.min_poly(x, unity);
    auto sqf = mu / gcd(mu, mu.derivative());
    if (static_cast<std::size_t>(sqf.degree()) != target) continue;
    auto fac = factor(mu);
    std::vector<std::vector<mpq_class>> out;
    for (std::size_t i = 0; i < fac.factors.size(); ++i)
      out.push_back(crt_idempotent_poly_eval(a, fac, mu, i, x, unity));
    return out;
  }
  throw FactorizationCapError("no primitive element found for idempotent splitting");
}

}  // namespace gradalg::detail
