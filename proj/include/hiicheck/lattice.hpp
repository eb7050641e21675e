#pragma once

#include <optional>
#include <vector>

#include "hiicheck/rational.hpp"

namespace hii {

using Vec = std::vector<long>;

long dot(const Vec& a, const Vec& b);

/// Dense integer matrix with arbitrary-precision entries, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols);
  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<Vec>& rows, size_t cols);

  size_t rows() const noexcept { return rows_; }
  size_t cols() const noexcept { return cols_; }
  Integer& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix transpose() const;
  Integer determinant() const;  // square only, Bareiss elimination
  bool is_diagonal() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(size_t a, size_t b);
  void swap_cols(size_t a, size_t b);
  /// row a += k * row b
  void add_row(size_t a, size_t b, const Integer& k);
  void add_col(size_t a, size_t b, const Integer& k);
  void negate_row(size_t a);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * M * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  std::vector<Integer> diagonal;  // min(rows, cols) entries, nonnegative
  size_t rank = 0;

  /// Nontrivial torsion invariants (diagonal entries > 1).
  std::vector<Integer> torsion() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

size_t matrix_rank(const IntMatrix& m);

/// Integer solution x of x * B = w (B given by rows), if one exists.
std::optional<Vec> solve_row_combination(const std::vector<Vec>& basis, const Vec& w);

/// Exact inverse of a square matrix over Q; nullopt when singular.
std::optional<std::vector<std::vector<Rational>>> rational_inverse(const IntMatrix& m);

}  // namespace hii
