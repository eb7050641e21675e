#include "hiicheck/lattice.hpp"

#include <utility>

#include "hiicheck/errors.hpp"

namespace hii {

long dot(const Vec& a, const Vec& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntMatrix::IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("ragged integer matrix");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw InvalidInput("matrix shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw InvalidInput("determinant of a non-square matrix");
  const size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool IntMatrix::is_diagonal() const {
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
    }
  }
  return true;
}

void IntMatrix::swap_rows(size_t a, size_t b) {
  if (a == b) return;
  for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(size_t a, size_t b) {
  if (a == b) return;
  for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(size_t a, size_t b, const Integer& k) {
  if (k == 0) return;
  for (size_t j = 0; j < cols_; ++j) (*this)(a, j) += k * (*this)(b, j);
}

void IntMatrix::add_col(size_t a, size_t b, const Integer& k) {
  if (k == 0) return;
  for (size_t i = 0; i < rows_; ++i) (*this)(i, a) += k * (*this)(i, b);
}

void IntMatrix::negate_row(size_t a) {
  for (size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : diagonal) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const size_t rows = m.rows();
  const size_t cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto row_op = [&](size_t a, size_t b, const Integer& k) {
    d.add_row(a, b, k);
    u.add_row(a, b, k);
  };
  auto col_op = [&](size_t a, size_t b, const Integer& k) {
    d.add_col(a, b, k);
    v.add_col(a, b, k);
  };

  const size_t steps = std::min(rows, cols);
  for (size_t t = 0; t < steps; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      bool found = false;
      size_t pr = t, pc = t;
      Integer best;
      for (size_t i = t; i < rows; ++i) {
        for (size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          Integer a = abs(d(i, j));
          if (!found || a < best) {
            best = a;
            pr = i;
            pc = j;
            found = true;
          }
        }
      }
      if (!found) break;
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer k;
        mpz_fdiv_q(k.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_op(i, t, -k);
        if (d(i, t) != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer k;
        mpz_fdiv_q(k.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_op(j, t, -k);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and retry
      bool divides = true;
      for (size_t i = t + 1; i < rows && divides; ++i) {
        for (size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            row_op(t, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  SmithForm out;
  out.diagonal.resize(steps);
  for (size_t t = 0; t < steps; ++t) {
    out.diagonal[t] = d(t, t);
    if (d(t, t) != 0) ++out.rank;
  }
  out.D = std::move(d);
  out.U = std::move(u);
  out.V = std::move(v);
  return out;
}

size_t matrix_rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

std::optional<std::vector<std::vector<Rational>>> rational_inverse(const IntMatrix& m) {
  const size_t n = m.rows();
  if (m.cols() != n) throw InvalidInput("inverse of a non-square matrix");
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  }
  return out;
}

std::optional<Vec> solve_row_combination(const std::vector<Vec>& basis, const Vec& w) {
  if (basis.empty()) {
    for (long x : w) {
      if (x != 0) return std::nullopt;
    }
    return Vec{};
  }
  const size_t n = basis.size();
  const size_t dim = w.size();
  // x * B = w  <=>  B^T x^T = w^T; use SNF of B^T: U B^T V = D
  IntMatrix bt = IntMatrix::from_rows(basis, dim).transpose();
  SmithForm snf = smith_normal_form(bt);
  IntMatrix rhs(dim, 1);
  for (size_t i = 0; i < dim; ++i) rhs(i, 0) = w[i];
  IntMatrix uw = snf.U * rhs;
  // D y = U w, x = V y
  IntMatrix y(n, 1);
  for (size_t i = 0; i < dim; ++i) {
    Integer di = i < n ? snf.D(i, i) : Integer(0);
    if (di == 0) {
      if (uw(i, 0) != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(uw(i, 0).get_mpz_t(), di.get_mpz_t())) return std::nullopt;
    y(i, 0) = uw(i, 0) / di;
  }
  IntMatrix x = snf.V * y;
  Vec out(n);
  for (size_t i = 0; i < n; ++i) out[i] = to_long(x(i, 0));
  return out;
}

}  // namespace hii
