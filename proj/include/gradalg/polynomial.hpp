#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <algorithm>
#include <utility>
#include <vector>

#include "gradalg/errors.hpp"
#include "gradalg/field.hpp"

namespace gradalg {

// Univariate polynomial over K; coeffs[i] multiplies x^i, no trailing zeros.
template <ExactField K>
class Poly {
 public:
  using value_type = typename K::value_type;

  Poly() = default;
  explicit Poly(K field) : field_(field) {}
  Poly(K field, std::vector<value_type> coeffs) : field_(field), coeffs_(std::move(coeffs)) { trim(); }

  static Poly constant(K field, value_type c) { return Poly(field, {std::move(c)}); }
  static Poly x(K field) { return Poly(field, {field.zero(), field.one()}); }

  const K& field() const { return field_; }
  const std::vector<value_type>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  value_type leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }
  value_type coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

  Poly monic() const {
    if (is_zero()) return *this;
    auto inv = field_.inv(leading());
    Poly out = *this;
    for (auto& c : out.coeffs_) c = field_.mul(c, inv);
    return out;
  }

  Poly operator+(const Poly& o) const {
    std::vector<value_type> c(std::max(coeffs_.size(), o.coeffs_.size()), field_.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(c));
  }
  Poly operator-(const Poly& o) const {
    std::vector<value_type> c(std::max(coeffs_.size(), o.coeffs_.size()), field_.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.sub(coeff(i), o.coeff(i));
    return Poly(field_, std::move(c));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<value_type> c(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (field_.is_zero(coeffs_[i])) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) field_.fma(c[i + j], coeffs_[i], o.coeffs_[j]);
    }
    return Poly(field_, std::move(c));
  }
  Poly scale(const value_type& s) const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = field_.mul(c, s);
    out.trim();
    return out;
  }

  // (quotient, remainder)
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<value_type> r = coeffs_;
    if (r.size() < d.coeffs_.size()) return {Poly(field_), *this};
    std::vector<value_type> q(r.size() - d.coeffs_.size() + 1, field_.zero());
    auto inv = field_.inv(d.leading());
    for (std::size_t k = q.size(); k-- > 0;) {
      auto c = field_.mul(r[k + d.coeffs_.size() - 1], inv);
      q[k] = c;
      if (field_.is_zero(c)) continue;
      for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
        r[k + j] = field_.sub(r[k + j], field_.mul(c, d.coeffs_[j]));
    }
    return {Poly(field_, std::move(q)), Poly(field_, std::move(r))};
  }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly operator/(const Poly& d) const { return divmod(d).first; }

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly(field_);
    std::vector<value_type> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      c[i - 1] = field_.mul(field_.from_int(static_cast<long>(i)), coeffs_[i]);
    return Poly(field_, std::move(c));
  }

  value_type evaluate(const value_type& x) const {
    auto acc = field_.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!a.field_.equal(a.coeffs_[i], b.coeffs_[i])) return false;
    return true;
  }

  // Human-readable form in x, highest degree first.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (field_.is_zero(coeffs_[i])) continue;
      std::string c = field_.to_rational(coeffs_[i]).get_str();
      if (!out.empty()) out += (c[0] == '-') ? " - " : " + ";
      if (c[0] == '-' && !out.empty()) c.erase(0, 1);
      if (i == 0) {
        out += c;
        continue;
      }
      if (c == "-1") out += "-";
      else if (c != "1") out += c + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  K field_{};
  std::vector<value_type> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
template <ExactField K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, s, t) with s a + t b = g monic.
template <ExactField K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> extended_gcd(const Poly<K>& a, const Poly<K>& b) {
  const K& f = a.field();
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0 = Poly<K>::constant(f, f.one()), s1(f);
  Poly<K> t0(f), t1 = Poly<K>::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto inv = f.inv(r0.leading());
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

// base^e mod m
template <ExactField K>
Poly<K> pow_mod(Poly<K> base, std::uint64_t e, const Poly<K>& m) {
  Poly<K> result = Poly<K>::constant(base.field(), base.field().one()) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) result = (result * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return result;
}

template <ExactField K>
struct Factorization {
  typename K::value_type unit;                    // leading coefficient
  std::vector<std::pair<Poly<K>, unsigned>> factors;  // monic irreducibles with multiplicity

  Poly<K> expand(const K& field) const {
    Poly<K> acc = Poly<K>::constant(field, unit);
    for (const auto& [f, m] : factors)
      for (unsigned i = 0; i < m; ++i) acc = acc * f;
    return acc;
  }
};

struct FactorLimits {
  std::size_t max_degree = 48;
  std::size_t max_modular_factors = 18;
};

// Squarefree decomposition then Berlekamp splitting.
Factorization<PrimeField> factor(const Poly<PrimeField>& p, const FactorLimits& limits = {});

// Squarefree decomposition, then modular factorisation, Hensel lifting and
// subset recombination. Throws FactorizationCapError beyond the limits.
Factorization<Rationals> factor(const Poly<Rationals>& p, const FactorLimits& limits = {});

// Distinct irreducible factors of a squarefree monic polynomial over F_p.
std::vector<Poly<PrimeField>> berlekamp(const Poly<PrimeField>& squarefree_monic);

}  // namespace gradalg
