#include <doctest.h>

#include "abbvloc/polytope.hpp"
#include "abbvloc/toric.hpp"

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

HPolytope standard_simplex(std::size_t d) {
  std::vector<Vector> normals;
  for (std::size_t i = 0; i < d; ++i) normals.push_back(-Vector::unit(d, i));
  return HPolytope::from_h_representation(normals, Vector(std::vector<Rational>(d, Rational(1))));
}

// |x| + |y| + |z| <= 1 in the chart phi_0 = 1.
HPolytope octahedron() {
  std::vector<Vector> normals;
  for (int a : {-1, 1})
    for (int b : {-1, 1})
      for (int c : {-1, 1}) normals.push_back(Vector{-1, -a, -b, -c});
  return HPolytope::from_h_representation(normals, Vector{1, 0, 0, 0});
}

// 0 <= x, y <= 1 in the chart phi_0 = 1.
HPolytope unit_square() {
  return HPolytope::from_h_representation({Vector{0, -1, 0}, Vector{0, 0, -1}, Vector{-1, 1, 0}, Vector{-1, 0, 1}},
                                          Vector{1, 0, 0});
}

std::vector<Rational> positive_vector(RationalSampler& s, std::size_t d) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(s.small_positive());
  return out;
}

}  // namespace

TEST_CASE("standard simplices") {
  const HPolytope triangle = standard_simplex(3);
  CHECK(triangle.vertices().size() == 3);
  CHECK(triangle.is_simple());
  CHECK(triangle.edges().size() == 3);
  CHECK(triangulation_volume(triangle) == Rational(1, 2));
  CHECK(lawrence_volume(triangle, LinearFunctional{Vector{1, 2, 4}, 0}) == Rational(1, 2));
  for (std::size_t d = 2; d <= 5; ++d)
    CHECK(triangulation_volume(standard_simplex(d)) == 1 / factorial(static_cast<unsigned>(d - 1)));
}

TEST_CASE("square and octahedron") {
  const HPolytope square = unit_square();
  CHECK(square.vertices().size() == 4);
  CHECK(square.edges().size() == 4);
  CHECK(triangulation_volume(square) == 1);
  CHECK(lawrence_volume(square, LinearFunctional{Vector{0, 1, 3}, 0}) == 1);
  const HPolytope oct = octahedron();
  CHECK(oct.vertices().size() == 6);
  CHECK_FALSE(oct.is_simple());
  CHECK(triangulation_volume(oct) == Rational(4, 3));
  for (std::size_t base = 0; base < oct.vertices().size(); ++base) CHECK(triangulation_volume(oct, base) == Rational(4, 3));
  CHECK(kind_of([&] { lawrence_volume(oct, LinearFunctional{Vector{0, 1, 2, 5}, 0}); }) == ErrorKind::NotSimpleVertex);
}

TEST_CASE("Lawrence equals triangulation for random functionals") {
  RationalSampler s(17);
  for (std::size_t d = 2; d <= 5; ++d) {
    std::vector<HPolytope> polytopes = {standard_simplex(d), HPolytope::from_cone(fixtures::simplex_cone(positive_vector(s, d)))};
    for (const auto& p : polytopes) {
      const Rational volume = triangulation_volume(p);
      CHECK(volume > 0);
      for (std::size_t base = 1; base < p.vertices().size(); ++base) CHECK(triangulation_volume(p, base) == volume);
      for (int t = 0; t < 20; ++t) CHECK(lawrence_volume(p, sample_functional(p, s)) == volume);
    }
  }
  const HPolytope conifold = HPolytope::from_cone(fixtures::conifold_cone({3, 1, 2}));
  for (int t = 0; t < 20; ++t) CHECK(lawrence_volume(conifold, sample_functional(conifold, s)) == triangulation_volume(conifold));
}

TEST_CASE("edge-constant functionals are rejected") {
  const HPolytope triangle = standard_simplex(3);
  CHECK(kind_of([&] { lawrence_volume(triangle, LinearFunctional{Vector{1, 1, 0}, 0}); }) ==
        ErrorKind::EdgeConstantFunctional);
}

TEST_CASE("H-representation and cone enumeration agree") {
  RationalSampler s(18);
  for (std::size_t d = 2; d <= 5; ++d) {
    const GoodCone cone = fixtures::simplex_cone(positive_vector(s, d));
    const HPolytope from_cone = HPolytope::from_cone(cone);
    const HPolytope from_h = HPolytope::from_h_representation(cone.normals(), cone.reeb());
    REQUIRE(from_cone.vertices().size() == from_h.vertices().size());
    for (std::size_t i = 0; i < from_h.vertices().size(); ++i) {
      CHECK(from_cone.vertices()[i].point == from_h.vertices()[i].point);
      CHECK(from_cone.vertices()[i].active == from_h.vertices()[i].active);
    }
  }
}

TEST_CASE("polytope validation") {
  CHECK(kind_of([] { HPolytope::from_h_representation({Vector{-1, 0}, Vector{0, -1}}, Vector{1, -1}); }) ==
        ErrorKind::UnboundedSection);
  CHECK(kind_of([] { HPolytope({Vector{-1, 0}, Vector{0, -1}}, Vector{1, 1}, {Covector{2, 0}}); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([] { omega_h(Vector{1, 1}, std::vector<Covector>{Covector{1, 0}}); }) == ErrorKind::InvalidInput);
  CHECK(omega_h(Vector{1, 1}, std::vector<Covector>{Covector{-1, 1}}) == 1);
}

TEST_CASE("msy bridge on cone fixtures") {
  RationalSampler s(19);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(msy_check(fixtures::weighted_sphere_cone(s.distinct_positive(n + 1)), 42).equal);
    CHECK(msy_check(fixtures::simplex_cone(positive_vector(s, n + 1)), 42).equal);
  }
  const auto conifold = msy_check(fixtures::conifold_cone({3, Rational(3, 2), Rational(3, 2)}), 42);
  CHECK(conifold.equal);
  CHECK(conifold.rhs == PiScalar(Rational(16, 27), 3));
}
