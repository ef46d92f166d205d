#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abbvloc/error.hpp"
#include "abbvloc/rational.hpp"

namespace abbvloc {

/// Fixed-length list of rationals tagged by the space it lives in.
template <class Tag>
class Coords {
 public:
  Coords() = default;
  explicit Coords(std::size_t dim) : entries_(dim, Rational(0)) {}
  explicit Coords(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  Coords(std::initializer_list<Rational> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  const std::vector<Rational>& entries() const { return entries_; }

  static Coords unit(std::size_t dim, std::size_t i) {
    Coords e(dim);
    e[i] = 1;
    return e;
  }

  bool is_zero() const {
    for (const auto& x : entries_)
      if (x != 0) return false;
    return true;
  }

  Coords& operator+=(const Coords& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs[i];
    return *this;
  }
  Coords& operator-=(const Coords& rhs) {
    check_same(rhs);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs[i];
    return *this;
  }
  Coords& operator*=(const Rational& c) {
    for (auto& x : entries_) x *= c;
    return *this;
  }
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator*(const Rational& c, Coords a) { return a *= c; }
  Coords operator-() const {
    Coords r(*this);
    for (auto& x : r.entries_) x = -x;
    return r;
  }
  friend bool operator==(const Coords& a, const Coords& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const Coords& a, const Coords& b) { return a.entries_ < b.entries_; }

 private:
  void check_same(const Coords& rhs) const {
    if (rhs.size() != size()) fail(ErrorKind::DimensionMismatch, "coordinate length mismatch");
  }

  std::vector<Rational> entries_;
};

struct PrimalTag {};
struct DualTag {};

/// Element of the torus Lie algebra t.
using Vector = Coords<PrimalTag>;
/// Element of t*, a linear functional on Vector.
using Covector = Coords<DualTag>;

/// <phi, x>
Rational pair(const Covector& phi, const Vector& x);

std::string to_string(const std::vector<Rational>& xs);
template <class Tag>
std::string to_string(const Coords<Tag>& xs) {
  return to_string(xs.entries());
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  template <class Tag>
  static Matrix from_rows(std::span<const Coords<Tag>> rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) r.push_back(row.entries());
    return from_rows(r);
  }
  template <class Tag>
  static Matrix from_columns(std::span<const Coords<Tag>> cols) {
    return from_rows(cols).transposed();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const;
  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Matrix-vector product; dimensions must agree.
Vector apply(const Matrix& m, const Vector& x);
/// phi o m, i.e. the covector x -> phi(m x).
Covector pullback(const Covector& phi, const Matrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination on the matrix
/// with rows scaled to integers.
Rational det(const Matrix& m);

/// Determinant of the matrix whose columns are the given vectors.
Rational det_columns(std::span<const Vector> cols);
/// Determinant of the matrix whose rows are the given covectors.
Rational det_rows(std::span<const Covector> rows);

/// Solves a x = rhs exactly. Throws SingularMatrix when det(a) = 0.
Vector solve_linear(const Matrix& a, const Vector& rhs);

Matrix inverse(const Matrix& a);

std::size_t rank(const Matrix& m);

/// Elementary divisors d_1 | d_2 | ... of an integer matrix, one per
/// min(rows, cols). Zero rows or columns contribute zero divisors.
std::vector<Integer> smith_normal_form(const Matrix& a);

/// gcd of the absolute values of integer entries (0 for the zero vector).
Integer content(const std::vector<Rational>& integer_entries);

}  // namespace abbvloc
