#include "abbvloc/linalg.hpp"

#include <algorithm>

namespace abbvloc {

Rational pair(const Covector& phi, const Vector& x) {
  if (phi.size() != x.size()) fail(ErrorKind::DimensionMismatch, "pairing of covector and vector of different dimension");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += phi[i] * x[i];
  return s;
}

std::string to_string(const std::vector<Rational>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += to_string(xs[i]);
  }
  return s + ")";
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> col(rows_);
  for (std::size_t i = 0; i < rows_; ++i) col[i] = (*this)(i, c);
  return col;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

Vector apply(const Matrix& m, const Vector& x) {
  if (m.cols() != x.size()) fail(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  Vector y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j) * x[j];
  return y;
}

Covector pullback(const Covector& phi, const Matrix& m) {
  if (m.rows() != phi.size()) fail(ErrorKind::DimensionMismatch, "pullback shape mismatch");
  Covector r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) r[j] += phi[i] * m(i, j);
  return r;
}

Rational det(const Matrix& m) {
  if (!m.is_square()) fail(ErrorKind::NonSquareMatrix, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row; det(m) = det(a) / scale.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  Rational d(a[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

Rational det_columns(std::span<const Vector> cols) { return det(Matrix::from_columns(cols)); }

Rational det_rows(std::span<const Covector> rows) { return det(Matrix::from_rows(rows)); }

namespace {

// Reduces [a | b] in place to reduced row echelon form; returns pivot columns
// (restricted to the first `pivot_cols` columns).
std::vector<std::size_t> row_reduce(Matrix& a, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Vector solve_linear(const Matrix& a, const Vector& rhs) {
  if (!a.is_square()) fail(ErrorKind::NonSquareMatrix, "solve_linear needs a square matrix");
  if (rhs.size() != a.rows()) fail(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  const std::size_t n = a.rows();
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = rhs[i];
  }
  if (row_reduce(aug, n).size() != n) fail(ErrorKind::SingularMatrix, "singular linear system");
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquareMatrix, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  if (row_reduce(aug, n).size() != n) fail(ErrorKind::SingularMatrix, "matrix is not invertible");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return row_reduce(copy, m.cols()).size();
}

Integer content(const std::vector<Rational>& integer_entries) {
  Integer g = 0;
  for (const auto& x : integer_entries) {
    if (!is_integer(x)) fail(ErrorKind::InvalidInput, "content of a non-integer vector");
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  return g;
}

std::vector<Integer> smith_normal_form(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (!is_integer(m(i, j))) fail(ErrorKind::InvalidInput, "smith_normal_form needs integer entries");
      a[i][j] = m(i, j).get_num();
    }

  const std::size_t steps = std::min(rows, cols);
  std::vector<Integer> divisors(steps, Integer(0));
  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return divisors;  // trailing block is zero
      std::swap(a[t], a[pr]);
      for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    divisors[t] = abs(a[t][t]);
  }
  return divisors;
}

}  // namespace abbvloc
