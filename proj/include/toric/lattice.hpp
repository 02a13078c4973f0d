#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toric/integer.hpp"

namespace toric {

/// Point of the lattice Z^n.
using LatticeVector = std::vector<Integer>;

/// Divides v by the gcd of its entries. Throws PreconditionError on v = 0.
[[nodiscard]] LatticeVector primitive_vector(std::span<const Integer> v);

[[nodiscard]] bool is_zero(std::span<const Integer> v);
[[nodiscard]] Integer content(std::span<const Integer> v);
[[nodiscard]] std::string to_string(std::span<const Integer> v);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Matrix whose j-th column is columns[j]; every column must have length `rows`.
  static IntMatrix from_columns(std::size_t rows, std::span<const LatticeVector> columns);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] LatticeVector apply(std::span<const Integer> v) const;
  [[nodiscard]] IntMatrix operator*(const IntMatrix& o) const;
  [[nodiscard]] IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] -= factor * row[src]
  void sub_row_multiple(std::size_t dst, std::size_t src, Integer factor);
  /// col[dst] -= factor * col[src]
  void sub_col_multiple(std::size_t dst, std::size_t src, Integer factor);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
[[nodiscard]] Integer determinant(IntMatrix m);

/// Exact integer inverse of a square matrix with determinant +-1, computed by
/// unimodular row reduction. Returns nullopt when |det| != 1.
[[nodiscard]] std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

/// Smith normal form U * A * V = D with U, V unimodular and D diagonal with
/// non-negative entries d_1 | d_2 | ... .
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  /// Diagonal entries of d (length min(rows, cols)).
  std::vector<Integer> diagonal;
};

[[nodiscard]] SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace toric
