#pragma once

#include <utility>
#include <vector>

#include "gradalg/graded_algebra.hpp"
#include "gradalg/matrix.hpp"
#include "gradalg/polynomial.hpp"

namespace gradalg::detail {

// Structure constants of a GradedAlgebra converted into field values.
template <ExactField K>
class DenseAlgebra {
 public:
  using value_type = typename K::value_type;
  using Vec = std::vector<value_type>;

  DenseAlgebra(const GradedAlgebra& a, K field) : field_(field), n_(a.dim()), products_(n_ * n_) {
    for (const auto& s : a.table()) products_[s.i * n_ + s.j].emplace_back(s.k, field_.from_rational(s.value));
    unit_ = to_vec(a.unit());
  }

  const K& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const Vec& unit() const { return unit_; }
  const std::vector<std::pair<std::size_t, value_type>>& product(std::size_t i, std::size_t j) const {
    return products_[i * n_ + j];
  }

  Vec zero() const { return Vec(n_, field_.zero()); }
  Vec basis(std::size_t i) const {
    Vec v = zero();
    v[i] = field_.one();
    return v;
  }

  Vec to_vec(const Element& e) const {
    Vec v(n_);
    for (std::size_t i = 0; i < n_; ++i) v[i] = field_.from_rational(e[i]);
    return v;
  }
  Element to_element(const Vec& v) const {
    Element e(n_);
    for (std::size_t i = 0; i < n_; ++i) e[i] = field_.to_rational(v[i]);
    return e;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec out = zero();
    for (std::size_t i = 0; i < n_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (field_.is_zero(y[j])) continue;
        auto xy = field_.mul(x[i], y[j]);
        for (const auto& [k, c] : products_[i * n_ + j]) field_.fma(out[k], xy, c);
      }
    }
    return out;
  }

  Vec add(const Vec& x, const Vec& y) const {
    Vec out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = field_.add(x[i], y[i]);
    return out;
  }
  Vec sub(const Vec& x, const Vec& y) const {
    Vec out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = field_.sub(x[i], y[i]);
    return out;
  }
  Vec scale(const value_type& c, const Vec& x) const {
    Vec out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = field_.mul(c, x[i]);
    return out;
  }
  bool is_zero(const Vec& x) const {
    for (const auto& v : x)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  // Matrix of y -> x y; column j holds x b_j.
  Matrix<K> left_matrix(const Vec& x) const {
    Matrix<K> m(field_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& [k, c] : products_[i * n_ + j]) field_.fma(m(k, j), x[i], c);
    }
    return m;
  }
  // Matrix of y -> y x; column j holds b_j x.
  Matrix<K> right_matrix(const Vec& x) const {
    Matrix<K> m(field_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& [k, c] : products_[j * n_ + i]) field_.fma(m(k, j), x[i], c);
    }
    return m;
  }

  bool is_invertible(const Vec& x) const { return rank(left_matrix(x)) == n_; }

  std::optional<Vec> inverse(const Vec& x) const {
    auto y = solve(left_matrix(x), unit_);
    if (!y) return std::nullopt;
    if (mul(*y, x) != unit_ || mul(x, *y) != unit_) return std::nullopt;
    return y;
  }

  // Evaluates poly at x with the given unity element.
  Vec evaluate(const Poly<K>& p, const Vec& x, const Vec& unity) const {
    Vec acc = zero();
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = add(mul(acc, x), scale(p.coeffs()[i], unity));
    return acc;
  }

  Vec power(Vec x, std::uint64_t e, const Vec& unity) const {
    Vec r = unity;
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  // Minimal polynomial of x in the subalgebra with the given unity.
  Poly<K> min_poly(const Vec& x, const Vec& unity) const {
    EchelonBasis<K> powers(field_, n_, true);
    Vec cur = unity;
    while (powers.insert(cur)) cur = mul(cur, x);
    auto dep = powers.last_dependency();
    Vec coeffs(dep.size() + 1);
    for (std::size_t i = 0; i < dep.size(); ++i) coeffs[i] = field_.neg(dep[i]);
    coeffs.back() = field_.one();
    return Poly<K>(field_, std::move(coeffs));
  }

 private:
  K field_;
  std::size_t n_;
  std::vector<std::vector<std::pair<std::size_t, value_type>>> products_;
  Vec unit_;
};

// Coordinates of vectors with respect to an independent family.
template <ExactField K>
class Coordinates {
 public:
  using Vec = std::vector<typename K::value_type>;

  Coordinates(K field, std::size_t ambient, const std::vector<Vec>& family) : basis_(field, ambient, true) {
    for (const auto& v : family)
      if (!basis_.insert(v)) throw DomainError("dependent family passed to Coordinates");
  }
  std::size_t size() const { return basis_.dim(); }
  std::optional<Vec> of(const Vec& v) const { return basis_.coordinates(v); }
  Vec at(const Vec& v) const {
    auto c = basis_.coordinates(v);
    if (!c) throw DomainError("vector outside the spanned subspace");
    return *c;
  }

 private:
  EchelonBasis<K> basis_;
};

// Idempotent splitting of the commutative subalgebra spanned by `basis`
// (containing `unity`). Returns orthogonal primitive idempotents summing to unity.
std::vector<std::vector<std::uint64_t>> primitive_idempotents(const DenseAlgebra<PrimeField>& a,
                                                              const std::vector<std::vector<std::uint64_t>>& basis,
                                                              const std::vector<std::uint64_t>& unity);
std::vector<std::vector<mpq_class>> primitive_idempotents(const DenseAlgebra<Rationals>& a,
                                                          const std::vector<std::vector<mpq_class>>& basis,
                                                          const std::vector<mpq_class>& unity);

std::vector<std::vector<std::uint64_t>> jacobson_radical(const DenseAlgebra<PrimeField>& a);
std::vector<std::vector<mpq_class>> jacobson_radical(const DenseAlgebra<Rationals>& a);

// Elements of F_p^m, first nonzero coordinate equal to one (projective points).
template <class Fn>
bool for_each_projective_point(std::uint64_t p, std::size_t m, Fn&& fn) {
  for (std::size_t lead = 0; lead < m; ++lead) {
    std::vector<std::uint64_t> v(m, 0);
    v[lead] = 1;
    while (true) {
      if (!fn(v)) return false;
      std::size_t i = m;
      bool done = true;
      while (i > lead + 1) {
        --i;
        if (++v[i] < p) {
          done = false;
          break;
        }
        v[i] = 0;
      }
      if (done) break;
    }
  }
  return true;
}

}  // namespace gradalg::detail
