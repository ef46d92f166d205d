#include "abbvloc/sampling.hpp"

#include <algorithm>
#include <array>

namespace abbvloc {
namespace {

const std::array<Rational, 7>& positive_pool() {
  static const std::array<Rational, 7> pool = {Rational(1), Rational(2),    Rational(3),   Rational(5),
                                               Rational(7), Rational(1, 2), Rational(1, 3)};
  return pool;
}

}  // namespace

Rational RationalSampler::small_positive() { return positive_pool()[rng_.below(positive_pool().size())]; }

Rational RationalSampler::small_rational() {
  const std::uint64_t k = rng_.below(2 * positive_pool().size());
  const Rational& x = positive_pool()[k / 2];
  return (k % 2) ? Rational(-x) : x;
}

Vector RationalSampler::vector(std::size_t dim) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = small_rational();
  return v;
}

Covector RationalSampler::covector(std::size_t dim) {
  Covector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = small_rational();
  return v;
}

std::vector<Rational> RationalSampler::distinct_positive(std::size_t count) {
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational x(static_cast<long>(1 + rng_.below(24)), static_cast<long>(1 + rng_.below(6)));
    x.canonicalize();
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

}  // namespace abbvloc
