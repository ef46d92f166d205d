#include <doctest.h>

#include "abbvloc/error.hpp"
#include "abbvloc/linalg.hpp"
#include "abbvloc/pi_scalar.hpp"
#include "abbvloc/sampling.hpp"
#include "abbvloc/symmetric.hpp"
#include "support.hpp"

using namespace abbvloc;
using testsupport::brute_complete;
using testsupport::brute_elementary;
using testsupport::laplace_det;
using testsupport::random_matrix;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an abbvloc::Error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational(" 22/7 ") == Rational(22, 7));
  CHECK(parse_rational("+4/6") == Rational(2, 3));
  CHECK(kind_of([] { parse_rational("4/-6"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_rational("abc"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_rational(""); }) == ErrorKind::InvalidInput);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(5)) == "5");
}

TEST_CASE("power and factorial") {
  CHECK(power(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(power(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(power(Rational(-1, 2), 0) == 1);
  CHECK(kind_of([] { power(Rational(0), -1); }) == ErrorKind::PoleAtSample);
  CHECK(factorial(0) == 1);
  CHECK(factorial(6) == 720);
}

TEST_CASE("pi scalars") {
  const PiScalar a(Rational(2), 1), b(Rational(3), 2);
  CHECK(a * b == PiScalar(Rational(6), 3));
  CHECK(b / a == PiScalar(Rational(3, 2), 1));
  CHECK(a + a == PiScalar(Rational(4), 1));
  CHECK(PiScalar(Rational(0), 5) == PiScalar());
  CHECK(PiScalar() + b == b);
  CHECK(kind_of([&] { (void)(a + b); }) == ErrorKind::MixedPiPowers);
  CHECK(kind_of([&] { (void)(a / PiScalar()); }) == ErrorKind::PoleAtSample);
  CHECK(a.pow(-2) == PiScalar(Rational(1, 4), -2));
  CHECK(PiScalar(Rational(2, 3), 4).to_string() == "2/3 * pi^4");
  CHECK(PiScalar::pi().to_decimal() == "3.14159265359");
  CHECK(PiScalar(Rational(1)).to_decimal() == "1");
}

TEST_CASE("determinant examples") {
  CHECK(det(Matrix::from_rows({{2, 1}, {1, 3}})) == 5);
  CHECK(det(Matrix::from_rows({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}})) == 0);
  CHECK(det(Matrix::from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}})) ==
        Rational(1, 60));
  CHECK(det(Matrix::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det(Matrix::identity(0)) == 1);
  CHECK(kind_of([] { det(Matrix(2, 3)); }) == ErrorKind::NonSquareMatrix);
}

TEST_CASE("determinant agrees with Laplace expansion") {
  RationalSampler s(101);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      const Matrix m = random_matrix(s, n, n);
      CHECK(det(m) == laplace_det(m));
    }
}

TEST_CASE("determinant is multiplicative") {
  RationalSampler s(7);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      const Matrix a = random_matrix(s, n, n), b = random_matrix(s, n, n);
      CHECK(det(a * b) == det(a) * det(b));
      CHECK(det(a.transposed()) == det(a));
    }
}

TEST_CASE("solve and inverse round-trip") {
  RationalSampler s(11);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      const Matrix a = random_matrix(s, n, n);
      if (det(a) == 0) continue;
      const Vector rhs = s.vector(n);
      CHECK(apply(a, solve_linear(a, rhs)) == rhs);
      CHECK(a * inverse(a) == Matrix::identity(n));
    }
  CHECK(kind_of([] { solve_linear(Matrix::from_rows({{1, 2}, {2, 4}}), Vector{1, 1}); }) ==
        ErrorKind::SingularMatrix);
}

TEST_CASE("rank, pairing and pullback") {
  CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix::from_rows({{1, 0, 0}, {0, 1, 0}})) == 2);
  CHECK(rank(Matrix(3, 3)) == 0);
  CHECK(pair(Covector{1, 2, 3}, Vector{1, 1, Rational(1, 3)}) == 4);
  const Matrix m = Matrix::from_rows({{1, 1}, {0, 2}});
  const Covector phi{3, 5};
  const Vector x{7, -1};
  CHECK(pair(pullback(phi, m), x) == pair(phi, apply(m, x)));
  CHECK(kind_of([] { pair(Covector{1}, Vector{1, 2}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("Smith normal form examples") {
  CHECK(smith_normal_form(Matrix::from_rows({{2, 4}, {6, 8}})) == std::vector<Integer>{2, 4});
  CHECK(smith_normal_form(Matrix::from_rows({{1, 0, 0}, {1, 2, 0}})) == std::vector<Integer>{1, 2});
  CHECK(smith_normal_form(Matrix::from_rows({{1, 0}, {0, 0}})) == std::vector<Integer>{1, 0});
  CHECK(smith_normal_form(Matrix::from_rows({{4, 6}})) == std::vector<Integer>{2});
  CHECK(content({Rational(-4), Rational(6), Rational(0)}) == 2);
  CHECK(content({Rational(0)}) == 0);
}

TEST_CASE("Smith normal form is invariant under unimodular completions") {
  SplitMix64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
    const std::size_t k = std::min(r, c);
    Matrix d(r, c);
    std::vector<Integer> expected;
    Integer running = 1;
    for (std::size_t i = 0; i < k; ++i) {
      running *= Integer(1 + static_cast<long>(rng.below(3)));
      d(i, i) = running;
      expected.push_back(running);
    }
    const Matrix a = testsupport::random_unimodular(rng, r) * d * testsupport::random_unimodular(rng, c);
    const auto snf = smith_normal_form(a);
    CHECK(snf == expected);
    for (std::size_t i = 0; i + 1 < snf.size(); ++i)
      if (snf[i] != 0) CHECK(snf[i + 1] % snf[i] == 0);
  }
}

TEST_CASE("multi-indices") {
  CHECK(Multiindex::parse("2,1,1").parts() == std::vector<int>{1, 1, 2});
  CHECK(Multiindex::parse("2,1,1").weight() == 4);
  CHECK(Multiindex::parse("3,1").to_string() == "(1,3)");
  CHECK(Multiindex::parse("").empty());
  CHECK(kind_of([] { Multiindex::parse("1,x"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { Multiindex(std::vector<int>{0}); }) == ErrorKind::InvalidInput);
  const std::size_t partition_counts[] = {1, 1, 2, 3, 5, 7, 11, 15};
  for (int m = 0; m < 8; ++m) CHECK(multiindices_of_weight(m).size() == partition_counts[m]);
}

TEST_CASE("symmetric polynomial examples") {
  const std::vector<Rational> xs{1, 2, 3};
  CHECK(elementary_symmetric(1, xs) == 6);
  CHECK(elementary_symmetric(2, xs) == 11);
  CHECK(elementary_symmetric(3, xs) == 6);
  CHECK(elementary_symmetric(4, xs) == 0);
  CHECK(complete_homogeneous(2, xs) == 25);
  CHECK(power_sum(2, xs) == 14);
  CHECK(s_J(Multiindex::parse("1,2"), xs) == 66);
  CHECK(s_J(Multiindex(), xs) == 1);
}

TEST_CASE("symmetric polynomials agree with brute force") {
  RationalSampler s(5);
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(s.small_rational());
    for (int k = 0; k <= 6; ++k) {
      CHECK(elementary_symmetric(k, xs) == brute_elementary(k, xs));
      CHECK(complete_homogeneous(k, xs) == brute_complete(k, xs));
    }
  }
}

TEST_CASE("Newton identities and the e-h relation") {
  RationalSampler s(9);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(s.small_rational());
    for (int k = 1; k <= 6; ++k) {
      // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
      Rational newton = 0;
      for (int i = 1; i <= k; ++i) {
        const Rational term = elementary_symmetric(k - i, xs) * power_sum(i, xs);
        newton += (i % 2 == 1) ? term : Rational(-term);
      }
      CHECK(newton == k * elementary_symmetric(k, xs));
      Rational eh = 0;
      for (int i = 0; i <= k; ++i) {
        const Rational term = elementary_symmetric(i, xs) * complete_homogeneous(k - i, xs);
        eh += (i % 2 == 0) ? term : Rational(-term);
      }
      CHECK(eh == 0);
    }
  }
}

TEST_CASE("sampler is deterministic and draws from the pool") {
  RationalSampler a(42), b(42);
  const std::vector<Rational> pool{1, 2, 3, 5, 7, Rational(1, 2), Rational(1, 3)};
  for (int i = 0; i < 200; ++i) {
    const Rational x = a.small_rational();
    CHECK(x == b.small_rational());
    CHECK(std::find(pool.begin(), pool.end(), abs(x)) != pool.end());
  }
  RationalSampler c(1);
  const auto w = c.distinct_positive(8);
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(w[i] > 0);
    for (std::size_t j = i + 1; j < w.size(); ++j) CHECK(w[i] != w[j]);
  }
}
