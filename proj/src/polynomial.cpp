#include "gradalg/polynomial.hpp"

#include <random>

#include "gradalg/matrix.hpp"

namespace gradalg {

namespace {

using FpPoly = Poly<PrimeField>;
using QPoly = Poly<Rationals>;

bool is_one_poly(const FpPoly& f) { return f.degree() == 0 && f.leading() == 1; }

// p-th root of a polynomial whose derivative vanishes.
FpPoly pth_root(const FpPoly& f) {
  const auto p = f.field().p;
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return FpPoly(f.field(), std::move(c));
}

void squarefree_fp(const FpPoly& f, unsigned mult, std::vector<std::pair<FpPoly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  FpPoly c = gcd(f, f.derivative());
  FpPoly w = f / c;
  unsigned i = 1;
  while (!is_one_poly(w)) {
    FpPoly y = gcd(w, c);
    FpPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree_fp(pth_root(c.monic()), mult * static_cast<unsigned>(f.field().p), out);
}

}  // namespace

std::vector<FpPoly> berlekamp(const FpPoly& f) {
  const PrimeField& F = f.field();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n <= 1) return {f};

  // Rows: x^{ip} mod f minus x^i; left kernel gives the Berlekamp subalgebra.
  Matrix<PrimeField> q(F, n, n);
  FpPoly xp = pow_mod(FpPoly::x(F), F.p, f);
  FpPoly cur = FpPoly::constant(F, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q(i, j) = cur.coeff(j);
    q(i, i) = F.sub(q(i, i), 1);
    cur = (cur * xp) % f;
  }
  auto kernel = kernel_basis(q.transpose());
  const std::size_t r = kernel.size();
  std::vector<FpPoly> factors{f};
  if (r == 1) return factors;

  std::vector<FpPoly> basis;
  for (auto& v : kernel) {
    FpPoly g(F, v);
    if (g.degree() > 0) basis.push_back(std::move(g));
  }

  auto split_with = [&](const FpPoly& g, std::uint64_t s) {
    std::vector<FpPoly> next;
    for (const auto& h : factors) {
      if (h.degree() <= 1) {
        next.push_back(h);
        continue;
      }
      FpPoly d = gcd(h, g - FpPoly::constant(F, s));
      if (d.degree() > 0 && d.degree() < h.degree()) {
        next.push_back(d);
        next.push_back((h / d).monic());
      } else {
        next.push_back(h);
      }
    }
    factors = std::move(next);
  };

  if (F.p <= 1000) {
    for (const auto& g : basis) {
      for (std::uint64_t s = 0; s < F.p && factors.size() < r; ++s) split_with(g, s);
      if (factors.size() == r) break;
    }
  } else {
    // Random elements of the Berlekamp subalgebra, fixed seed.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::uint64_t> coin(0, F.p - 1);
    while (factors.size() < r) {
      FpPoly g(F);
      for (const auto& b : basis) g = g + b.scale(coin(rng));
      if (g.degree() <= 0) continue;
      std::vector<FpPoly> next;
      for (const auto& h : factors) {
        if (h.degree() <= 1) {
          next.push_back(h);
          continue;
        }
        FpPoly t = pow_mod(g, (F.p - 1) / 2, h) - FpPoly::constant(F, 1);
        FpPoly d = gcd(h, t);
        if (d.degree() > 0 && d.degree() < h.degree()) {
          next.push_back(d);
          next.push_back((h / d).monic());
        } else {
          next.push_back(h);
        }
      }
      factors = std::move(next);
    }
  }
  return factors;
}

Factorization<PrimeField> factor(const FpPoly& f, const FactorLimits& limits) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  if (static_cast<std::size_t>(f.degree()) > limits.max_degree * 4)
    throw FactorizationCapError("polynomial degree " + std::to_string(f.degree()) + " exceeds the cap");
  Factorization<PrimeField> out{f.leading(), {}};
  std::vector<std::pair<FpPoly, unsigned>> sqf;
  squarefree_fp(f.monic(), 1, sqf);
  for (const auto& [g, m] : sqf)
    for (auto& h : berlekamp(g)) out.factors.emplace_back(h.monic(), m);
  return out;
}

namespace {

// Integer polynomials as coefficient vectors, low degree first, trimmed.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  ztrim(c);
  return c;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  ztrim(c);
  return c;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  ztrim(c);
  return c;
}

mpz_class symmetric_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

ZPoly zmod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) c = symmetric_mod(c, m);
  ztrim(a);
  return a;
}

ZPoly zscale(ZPoly a, const mpz_class& s) {
  for (auto& c : a) c *= s;
  ztrim(a);
  return a;
}

// Division by a monic polynomial; returns nullopt when the remainder is nonzero.
std::optional<ZPoly> zdiv_exact(ZPoly a, const ZPoly& monic_b) {
  if (monic_b.empty()) return std::nullopt;
  if (a.size() < monic_b.size()) {
    if (a.empty()) return ZPoly{};
    return std::nullopt;
  }
  ZPoly q(a.size() - monic_b.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class c = a[k + monic_b.size() - 1];
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < monic_b.size(); ++j) a[k + j] -= c * monic_b[j];
  }
  for (const auto& c : a)
    if (c != 0) return std::nullopt;
  ztrim(q);
  return q;
}

FpPoly to_fp(const ZPoly& a, const PrimeField& F) {
  std::vector<std::uint64_t> c(a.size());
  mpz_class p = static_cast<unsigned long>(F.p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a[i].get_mpz_t(), p.get_mpz_t());
    c[i] = r.get_ui();
  }
  return FpPoly(F, std::move(c));
}

ZPoly from_fp(const FpPoly& a) {
  ZPoly c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<unsigned long>(a.coeffs()[i]);
  return c;
}

// Lift G = g*h (mod p) with g, h monic to G = g*h (mod p^e).
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& G, const FpPoly& g0, const FpPoly& h0, unsigned e) {
  const PrimeField& F = g0.field();
  auto [one, s, t] = extended_gcd(g0, h0);
  (void)one;
  mpz_class p = static_cast<unsigned long>(F.p);
  ZPoly g = from_fp(g0), h = from_fp(h0);
  mpz_class pk = p;
  for (unsigned k = 1; k < e; ++k) {
    ZPoly diff = zsub(G, zmul(g, h));
    for (auto& c : diff) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
    FpPoly E = to_fp(diff, F);
    FpPoly dg = (E * t) % g0;
    FpPoly dh = (E * s) % h0;
    g = zadd(g, zscale(from_fp(dg), pk));
    h = zadd(h, zscale(from_fp(dh), pk));
    pk *= p;
  }
  return {g, h};
}

std::vector<std::uint64_t> small_primes() {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 3; out.size() < 60; n += 2)
    if (is_prime(n)) out.push_back(n);
  return out;
}

// Irreducible monic factors over Z of a monic squarefree integer polynomial.
std::vector<ZPoly> zassenhaus_monic(ZPoly G, const FactorLimits& limits) {
  const std::size_t n = G.size() - 1;
  if (n <= 1) return {G};

  // choose a prime with G squarefree mod p and few modular factors
  std::vector<FpPoly> best;
  std::uint64_t best_p = 0;
  int good = 0;
  for (auto p : small_primes()) {
    PrimeField F{p};
    FpPoly gp = to_fp(G, F);
    if (static_cast<std::size_t>(gp.degree()) != n) continue;
    if (gcd(gp, gp.derivative()).degree() != 0) continue;
    auto facs = berlekamp(gp);
    if (best_p == 0 || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (++good >= 4 || best.size() == 1) break;
  }
  if (best_p == 0) throw FactorizationCapError("no good prime found for modular factorisation");
  if (best.size() == 1) return {G};
  if (best.size() > limits.max_modular_factors)
    throw FactorizationCapError(std::to_string(best.size()) + " modular factors exceed the recombination cap");

  // coefficient bound 2^n * ||G||_2 for monic factors; need p^e > 2 * bound
  mpz_class norm2 = 0;
  for (const auto& c : G) norm2 += c * c;
  mpz_class norm = sqrt(norm2) + 1;
  mpz_class bound = norm << n;
  mpz_class p = static_cast<unsigned long>(best_p);
  mpz_class pe = p;
  unsigned e = 1;
  while (pe <= 2 * bound) {
    pe *= p;
    ++e;
  }

  // lift one factor at a time: G = f_1 * rest
  PrimeField F{best_p};
  std::vector<ZPoly> lifted;
  ZPoly rest = G;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    FpPoly g0 = best[i];
    FpPoly h0 = FpPoly::constant(F, 1);
    for (std::size_t j = i + 1; j < best.size(); ++j) h0 = h0 * best[j];
    auto [g, h] = hensel_lift(rest, g0, h0, e);
    lifted.push_back(zmod(g, pe));
    rest = zmod(h, pe);
  }
  lifted.push_back(rest);

  std::vector<ZPoly> result;
  std::vector<bool> used(lifted.size(), false);
  std::size_t remaining = lifted.size();
  ZPoly current = G;
  for (std::size_t size = 1; 2 * size <= remaining; ++size) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (!used[i]) idx.push_back(i);
    std::vector<std::size_t> sel(size);
    for (std::size_t i = 0; i < size; ++i) sel[i] = i;
    bool restart = false;
    while (true) {
      ZPoly cand{1};
      for (auto s : sel) cand = zmod(zmul(cand, lifted[idx[s]]), pe);
      if (auto q = zdiv_exact(current, cand)) {
        result.push_back(cand);
        current = *q;
        for (auto s : sel) used[idx[s]] = true;
        remaining -= size;
        restart = true;
        break;
      }
      // next combination
      std::size_t k = size;
      while (k > 0 && sel[k - 1] == idx.size() - size + k - 1) --k;
      if (k == 0) break;
      ++sel[k - 1];
      for (std::size_t j = k; j < size; ++j) sel[j] = sel[j - 1] + 1;
    }
    if (restart) --size;  // retry the same subset size on the reduced set
  }
  if (current.size() > 1) result.push_back(current);
  return result;
}

// Factors a squarefree rational polynomial into monic irreducibles.
std::vector<QPoly> factor_squarefree_q(const QPoly& f, const FactorLimits& limits) {
  const Rationals Q;
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n <= 1) return {f.monic()};
  if (n > limits.max_degree)
    throw FactorizationCapError("degree " + std::to_string(n) + " exceeds the rational factorisation cap");

  // primitive integer multiple
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly F(f.coeffs().size());
  mpz_class content = 0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    mpq_class v = f.coeffs()[i] * den;
    F[i] = v.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), F[i].get_mpz_t());
  }
  for (auto& c : F) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  if (F.back() < 0)
    for (auto& c : F) c = -c;

  // monic transform G(x) = a^{n-1} F(x / a)
  const mpz_class a = F.back();
  ZPoly G(n + 1);
  mpz_class apow = 1;
  for (std::size_t i = n + 1; i-- > 0;) {
    // coefficient of x^i is F_i * a^{n-1-i}; the leading term becomes 1
    if (i == n) {
      G[i] = 1;
      continue;
    }
    G[i] = F[i] * apow;
    apow *= a;
  }

  std::vector<QPoly> out;
  for (const auto& g : zassenhaus_monic(G, limits)) {
    // undo the transform: g(a x), then normalise
    std::vector<mpq_class> c(g.size());
    mpz_class s = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
      c[i] = mpq_class(g[i] * s);
      s *= a;
    }
    out.push_back(QPoly(Q, std::move(c)).monic());
  }
  return out;
}

}  // namespace

Factorization<Rationals> factor(const QPoly& f, const FactorLimits& limits) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization<Rationals> out{f.leading(), {}};
  // Yun's squarefree decomposition
  QPoly a = f.monic();
  if (a.degree() == 0) return out;
  QPoly b = a.derivative();
  QPoly c = gcd(a, b);
  QPoly w = a / c;
  QPoly y = b / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    QPoly z = y - w.derivative();
    QPoly g = gcd(w, z);
    if (g.degree() > 0)
      for (auto& h : factor_squarefree_q(g, limits)) out.factors.emplace_back(std::move(h), i);
    w = w / g;
    y = z / g;
    ++i;
  }
  return out;
}

}  // namespace gradalg
