#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace gradalg {

// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

mpz_class determinant(const IntMatrix& m);

struct SmithForm {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix d;  // diagonal, d_1 | d_2 | ...
  IntMatrix v;  // unimodular, cols x cols
  std::size_t rank = 0;
  // Nonzero diagonal entries (positive), in order.
  std::vector<mpz_class> invariant_factors;
};

// U * m * V = D.
SmithForm smith_normal_form(const IntMatrix& m);

// Row-style Hermite normal form: nonzero rows, upper echelon, positive pivots,
// entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix h;
  std::vector<std::size_t> pivots;
};
HermiteForm hermite_normal_form(const IntMatrix& generators);

// Basis (as columns of the result) of the integer kernel {x in Z^cols : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Integer x with basis^T x = target, where basis rows span a lattice; nullopt if target is outside.
std::optional<std::vector<mpz_class>> lattice_coordinates(const IntMatrix& basis_rows,
                                                          const std::vector<mpz_class>& target);

}  // namespace gradalg
