#pragma once

#include <functional>
#include <vector>

#include "abbvloc/linalg.hpp"
#include "abbvloc/sampling.hpp"

namespace testsupport {

using abbvloc::Matrix;
using abbvloc::Rational;

// Laplace expansion along the first row.
inline Rational laplace_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    const Rational term = m(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

// e_k as a sum over k-subsets.
inline Rational brute_elementary(int k, const std::vector<Rational>& xs) {
  Rational total = 0;
  std::function<void(std::size_t, int, Rational)> rec = [&](std::size_t start, int left, Rational prod) {
    if (left == 0) {
      total += prod;
      return;
    }
    for (std::size_t i = start; i < xs.size(); ++i) rec(i + 1, left - 1, prod * xs[i]);
  };
  if (k >= 0) rec(0, k, Rational(1));
  return total;
}

// h_k as a sum over multisets of size k.
inline Rational brute_complete(int k, const std::vector<Rational>& xs) {
  if (k < 0) return 0;
  Rational total = 0;
  std::function<void(std::size_t, int, Rational)> rec = [&](std::size_t start, int left, Rational prod) {
    if (left == 0) {
      total += prod;
      return;
    }
    for (std::size_t i = start; i < xs.size(); ++i) rec(i, left - 1, prod * xs[i]);
  };
  rec(0, k, Rational(1));
  return total;
}

inline Matrix random_matrix(abbvloc::RationalSampler& s, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = s.small_rational();
  return m;
}

// Random integer matrix with det = +-1, built from elementary row operations.
inline Matrix random_unimodular(abbvloc::SplitMix64& rng, std::size_t n) {
  Matrix m = Matrix::identity(n);
  for (int step = 0; step < 12; ++step) {
    const std::size_t i = rng.below(n), j = rng.below(n);
    if (i == j) continue;
    const long k = static_cast<long>(rng.below(5)) - 2;
    for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
  }
  return m;
}

}  // namespace testsupport
