#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gradalg/errors.hpp"
#include "gradalg/field.hpp"

namespace gradalg {

// Dense row-major matrix over an exact field policy K.
template <ExactField K>
class Matrix {
 public:
  using value_type = typename K::value_type;

  Matrix() = default;
  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(K field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(K field, std::size_t cols, const std::vector<std::vector<value_type>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("ragged row in Matrix::from_rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<value_type> row(std::size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
  }
  std::vector<value_type> column(std::size_t c) const {
    std::vector<value_type> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_row(std::size_t r, const std::vector<value_type>& v) {
    std::copy(v.begin(), v.end(), data_.begin() + r * cols_);
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix shape mismatch in product");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) field_.fma(out(i, j), a, o(k, j));
      }
    return out;
  }

  std::vector<value_type> apply(const std::vector<value_type>& v) const {
    if (v.size() != cols_) throw DomainError("vector length mismatch in Matrix::apply");
    std::vector<value_type> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) field_.fma(out[i], (*this)(i, j), v[j]);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

 private:
  K field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

template <ExactField K>
struct Echelon {
  Matrix<K> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank() const { return pivots.size(); }
};

template <ExactField K>
Echelon<K> row_echelon(Matrix<K> m) {
  const K& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactField K>
std::size_t rank(const Matrix<K>& m) {
  return row_echelon(m).rank();
}

// Basis of {v : m v = 0}.
template <ExactField K>
std::vector<std::vector<typename K::value_type>> kernel_basis(const Matrix<K>& m) {
  const K& f = m.field();
  auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::vector<typename K::value_type>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename K::value_type> v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = f.neg(ech.reduced(r, free));
    out.push_back(std::move(v));
  }
  return out;
}

template <ExactField K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const K& f = m.field();
  const std::size_t n = m.rows();
  Matrix<K> aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto ech = row_echelon(std::move(aug));
  for (std::size_t c = 0; c < n; ++c) {
    if (c >= ech.pivots.size() || ech.pivots[c] != c) {
      throw SingularMatrixError(c, "matrix is singular: column " + std::to_string(c) +
                                       " depends on earlier columns");
    }
  }
  Matrix<K> out(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = ech.reduced(i, n + j);
  return out;
}

template <ExactField K>
typename K::value_type determinant(Matrix<K> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const K& f = m.field();
  const std::size_t n = m.rows();
  auto det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.is_zero(m(piv, c))) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    auto inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(m(i, c))) continue;
      auto factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

// Some x with m x = b, or nullopt when the system is inconsistent.
template <ExactField K>
std::optional<std::vector<typename K::value_type>> solve(const Matrix<K>& m,
                                                         const std::vector<typename K::value_type>& b) {
  const K& f = m.field();
  if (b.size() != m.rows()) throw DomainError("right-hand side length mismatch in solve");
  Matrix<K> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto ech = row_echelon(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  std::vector<typename K::value_type> x(m.cols(), f.zero());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, m.cols());
  return x;
}

// Incrementally maintained echelon basis of a subspace of K^n.
// Optionally tracks each stored row as a combination of the inserted vectors.
template <ExactField K>
class EchelonBasis {
 public:
  using value_type = typename K::value_type;
  using Vec = std::vector<value_type>;

  EchelonBasis() = default;
  EchelonBasis(K field, std::size_t ambient, bool track = false)
      : field_(field), ambient_(ambient), track_(track) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Original (unreduced) independent vectors, in insertion order.
  const std::vector<Vec>& generators() const { return generators_; }

  Vec reduce(Vec v) const { return reduce_tracked(std::move(v), nullptr); }

  bool contains(const Vec& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [&](const value_type& x) { return field_.is_zero(x); });
  }

  // Coordinates of v with respect to generators(), or nullopt if v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const {
    if (!track_) throw DomainError("EchelonBasis::coordinates requires tracking");
    Vec combo(generators_.size(), field_.zero());
    auto r = reduce_tracked(v, &combo);
    for (const auto& x : r)
      if (!field_.is_zero(x)) return std::nullopt;
    // r = v - sum combo_i * row_i and rows are combos of generators
    Vec out(generators_.size(), field_.zero());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (field_.is_zero(combo[i])) continue;
      for (std::size_t g = 0; g < combos_[i].size(); ++g) field_.fma(out[g], combo[i], combos_[i][g]);
    }
    return out;
  }

  // Inserts v; returns true when v was independent of the current span.
  bool insert(const Vec& v) {
    if (v.size() != ambient_) throw DomainError("vector length mismatch in EchelonBasis::insert");
    Vec combo;
    if (track_) combo.assign(generators_.size(), field_.zero());
    auto r = reduce_tracked(v, track_ ? &combo : nullptr);
    std::size_t piv = 0;
    while (piv < ambient_ && field_.is_zero(r[piv])) ++piv;
    if (piv == ambient_) {
      last_dependency_ = std::move(combo);
      return false;
    }
    auto inv = field_.inv(r[piv]);
    for (auto& x : r) x = field_.mul(x, inv);
    if (track_) {
      // row = (v - sum combo_i row_i) * inv, expressed over generators
      Vec gcombo(generators_.size() + 1, field_.zero());
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (field_.is_zero(combo[i])) continue;
        for (std::size_t g = 0; g < combos_[i].size(); ++g)
          gcombo[g] = field_.sub(gcombo[g], field_.mul(combo[i], combos_[i][g]));
      }
      gcombo[generators_.size()] = field_.one();
      for (auto& x : gcombo) x = field_.mul(x, inv);
      for (auto& c : combos_) c.push_back(field_.zero());
      combos_.push_back(std::move(gcombo));
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    generators_.push_back(v);
    return true;
  }

  // After a failed insert with tracking enabled: coefficients c with
  // v = sum c_i generators()[i] for the rejected vector v.
  Vec last_dependency() const {
    Vec out(generators_.size(), field_.zero());
    for (std::size_t i = 0; i < last_dependency_.size() && i < rows_.size(); ++i) {
      if (field_.is_zero(last_dependency_[i])) continue;
      for (std::size_t g = 0; g < combos_[i].size(); ++g)
        field_.fma(out[g], last_dependency_[i], combos_[i][g]);
    }
    return out;
  }

 private:
  Vec reduce_tracked(Vec v, Vec* combo) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto c = v[pivots_[i]];
      if (field_.is_zero(c)) continue;
      if (combo) (*combo)[i] = c;
      const auto& row = rows_[i];
      for (std::size_t j = 0; j < ambient_; ++j) {
        if (field_.is_zero(row[j])) continue;
        v[j] = field_.sub(v[j], field_.mul(c, row[j]));
      }
    }
    return v;
  }

  K field_{};
  std::size_t ambient_ = 0;
  bool track_ = false;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> generators_;
  std::vector<Vec> combos_;
  Vec last_dependency_;
};

}  // namespace gradalg
