#include "gradalg/int_matrix.hpp"

#include <utility>

#include "gradalg/errors.hpp"

namespace gradalg {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged row in IntMatrix::from_rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("integer matrix shape mismatch");
  IntMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
  if (v.size() != cols_) throw DomainError("vector length mismatch in IntMatrix::apply");
  std::vector<mpz_class> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square integer matrix");
  // Bareiss fraction-free elimination.
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[target] += q * row[source]
void add_row(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += q * m(source, j);
}

void add_col(IntMatrix& m, std::size_t target, std::size_t source, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += q * m(i, source);
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero |entry| in the trailing block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d(i, j) != 0 && (pr == rows || abs(d(i, j)) < abs(d(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    swap_rows(d, t, pr);
    swap_rows(u, t, pr);
    swap_cols(d, t, pc);
    swap_cols(v, t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        mpz_class q = floor_div(d(i, t), d(t, t));
        add_row(d, i, t, -q);
        add_row(u, i, t, -q);
        if (d(i, t) != 0) {
          swap_rows(d, t, i);
          swap_rows(u, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        mpz_class q = floor_div(d(t, j), d(t, t));
        add_col(d, j, t, -q);
        add_col(v, j, t, -q);
        if (d(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(v, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            add_row(d, t, i, 1);
            add_row(u, t, i, 1);
            clean = false;
            break;
          }
        }
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
    ++t;
  }

  SmithForm out{std::move(u), std::move(d), std::move(v), 0, {}};
  for (std::size_t i = 0; i < rows && i < cols; ++i) {
    if (out.d(i, i) == 0) break;
    out.invariant_factors.push_back(out.d(i, i));
    ++out.rank;
  }
  return out;
}

HermiteForm hermite_normal_form(const IntMatrix& generators) {
  IntMatrix a = generators;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // gcd-combine column c below row r into row r
    for (std::size_t i = r + 1; i < rows; ++i) {
      while (a(i, c) != 0) {
        if (a(r, c) == 0 || abs(a(i, c)) < abs(a(r, c))) {
          swap_rows(a, r, i);
          continue;
        }
        mpz_class q = floor_div(a(i, c), a(r, c));
        add_row(a, i, r, -q);
      }
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = 0; j < cols; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      mpz_class q = floor_div(a(i, c), a(r, c));
      add_row(a, i, r, -q);
    }
    pivots.push_back(c);
    ++r;
  }
  IntMatrix h(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) h(i, j) = a(i, j);
  return {std::move(h), std::move(pivots)};
}

IntMatrix integer_kernel(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  const std::size_t cols = m.cols();
  IntMatrix k(cols, cols - snf.rank);
  for (std::size_t j = snf.rank; j < cols; ++j)
    for (std::size_t i = 0; i < cols; ++i) k(i, j - snf.rank) = snf.v(i, j);
  return k;
}

std::optional<std::vector<mpz_class>> lattice_coordinates(const IntMatrix& basis_rows,
                                                          const std::vector<mpz_class>& target) {
  // Solve basis_rows^T x = target via the Smith form of basis_rows^T.
  IntMatrix a = basis_rows.transpose();
  if (target.size() != a.rows()) throw DomainError("target length mismatch in lattice_coordinates");
  auto snf = smith_normal_form(a);
  auto ub = snf.u.apply(target);
  std::vector<mpz_class> y(a.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < snf.rank) {
      if (ub[i] % snf.d(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / snf.d(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.v.apply(y);
}

}  // namespace gradalg
