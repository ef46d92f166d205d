#include <doctest.h>

#include "abbvloc/homogeneous.hpp"
#include "abbvloc/localization.hpp"
#include "abbvloc/sampling.hpp"

using namespace abbvloc;

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

std::array<Rational, 3> arr(const Vector& v) { return {v[0], v[1], v[2]}; }

}  // namespace

TEST_CASE("Stiefel volume at the undeformed Reeb element") {
  const RootData rd = fixtures::stiefel_so5_so3();
  const Vector b{0, 0, 1};
  CHECK(stiefel_closed_form(arr(b)) == PiScalar(Rational(2, 3), 4));
  for (const Vector& v : {Vector{2, 5, 3}, Vector{-1, Rational(1, 2), 7}, Vector{3, -2, Rational(1, 3)}}) {
    CHECK(homogeneous_volume(rd, b, v) == PiScalar(Rational(2, 3), 4));
    CHECK(stiefel_four_sum(arr(b), arr(v)) == PiScalar(Rational(2, 3), 4));
  }
}

TEST_CASE("Stiefel routes agree on random deformations") {
  const RootData rd = fixtures::stiefel_so5_so3();
  RationalSampler s(123);
  int done = 0;
  while (done < 20) {
    const Vector w = s.vector(3), v = s.vector(3);
    try {
      const PiScalar closed = stiefel_closed_form(arr(w));
      const PiScalar general = homogeneous_volume(rd, w, v);
      const PiScalar four = stiefel_four_sum(arr(w), arr(v));
      CHECK(general == closed);
      CHECK(four == closed);
      ++done;
    } catch (const Error& e) {
      CHECK((e.kind() == ErrorKind::PoleAtSample || e.kind() == ErrorKind::DegenerateReeb));
    }
  }
}

TEST_CASE("homogeneous volume is v-independent and homogeneous in b") {
  const RootData rd = fixtures::stiefel_so5_so3();
  const Vector b{1, Rational(1, 2), 3};
  const SampledQuantity q = [&](const Vector& v) { return homogeneous_volume(rd, b, v); };
  const auto outcome = check_v_independence(3, q, 10, 42);
  Vector b3 = b;
  b3 *= Rational(2);
  CHECK(homogeneous_volume(rd, b3, outcome.samples_used.front()) == outcome.value * PiScalar(Rational(1, 16)));
}

TEST_CASE("degenerate Reeb elements and poles") {
  const RootData rd = fixtures::stiefel_so5_so3();
  // p = (-1, 0, 1) vanishes on (1, 0, 1).
  CHECK(kind_of([&] { homogeneous_volume(rd, Vector{1, 0, 1}, Vector{2, 5, 3}); }) == ErrorKind::DegenerateReeb);
  CHECK(kind_of([&] { stiefel_closed_form({1, 2, 2}); }) == ErrorKind::PoleAtSample);
}

TEST_CASE("root data validation") {
  const RootData rd = fixtures::stiefel_so5_so3();
  CHECK(rd.roots().size() == 3);
  CHECK(rd.weyl_reps().size() == 4);
  CHECK(rd.orbit_length() == PiScalar::two_pi());
  CHECK_THROWS_AS(RootData(3, rd.roots(), rd.weyl_reps(), Vector{0, 0, 2}, rd.p()), Error);
  CHECK_THROWS_AS(RootData(3, rd.roots(), {Matrix(3, 3)}, rd.b(), rd.p()), Error);
  CHECK_THROWS_AS(RootData(2, rd.roots(), rd.weyl_reps(), rd.b(), rd.p()), Error);
}
