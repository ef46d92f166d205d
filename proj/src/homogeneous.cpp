#include "abbvloc/homogeneous.hpp"

#include <string>

#include "abbvloc/error.hpp"

namespace abbvloc {

RootData::RootData(std::size_t dim_t, std::vector<Covector> roots, std::vector<Matrix> weyl_reps, Vector b,
                   Covector p, PiScalar orbit_length)
    : dim_t_(dim_t),
      roots_(std::move(roots)),
      weyl_reps_(std::move(weyl_reps)),
      b_(std::move(b)),
      p_(std::move(p)),
      orbit_length_(std::move(orbit_length)) {
  if (dim_t_ == 0) fail(ErrorKind::InvalidInput, "dim_t must be positive");
  if (b_.size() != dim_t_ || p_.size() != dim_t_) fail(ErrorKind::InvalidInput, "b and p must have length dim_t");
  if (pair(p_, b_) != 1) fail(ErrorKind::InvalidInput, "projection must satisfy p(b) = 1");
  if (roots_.empty()) fail(ErrorKind::InvalidInput, "at least one root is required");
  for (const auto& r : roots_)
    if (r.size() != dim_t_) fail(ErrorKind::InvalidInput, "root has the wrong dimension");
  if (weyl_reps_.empty()) fail(ErrorKind::InvalidInput, "at least one Weyl representative is required");
  for (const auto& w : weyl_reps_) {
    if (w.rows() != dim_t_ || w.cols() != dim_t_) fail(ErrorKind::InvalidInput, "Weyl representative has the wrong shape");
    if (det(w) == 0) fail(ErrorKind::InvalidInput, "Weyl representative is not invertible");
  }
  if (orbit_length_.is_zero()) fail(ErrorKind::InvalidInput, "orbit length must be nonzero");
}

PiScalar homogeneous_volume(const RootData& rd, const Vector& b_prime, const Vector& v) {
  if (b_prime.size() != rd.dim_t() || v.size() != rd.dim_t())
    fail(ErrorKind::DimensionMismatch, "b' and v must have length dim_t");
  const long n = static_cast<long>(rd.roots().size());
  Rational sum = 0;
  for (const auto& w : rd.weyl_reps()) {
    const Vector wb = apply(w, b_prime);
    const Vector wv = apply(w, v);
    const Rational pb = pair(rd.p(), wb);
    if (pb == 0) fail(ErrorKind::DegenerateReeb, "p(Ad b') vanishes; b' is tangent to a closed-orbit isotropy");
    const Rational pv = pair(rd.p(), wv);
    const Vector transverse = wv - (pv / pb) * wb;
    Rational denom = power(pb, n + 1);
    for (const auto& root : rd.roots()) {
      const Rational value = pair(root, transverse);
      if (value == 0) fail(ErrorKind::PoleAtSample, "root factor vanishes at v = " + to_string(v));
      denom *= value;
    }
    sum += power(pv, n) / denom;
  }
  return PiScalar(sum / factorial(static_cast<unsigned>(n)), n) * rd.orbit_length();
}

PiScalar stiefel_four_sum(const std::array<Rational, 3>& xyz, const std::array<Rational, 3>& abc) {
  const auto& [x, y, z] = xyz;
  const auto& [a, b, g] = abc;
  auto nonzero = [](const Rational& q) {
    if (q == 0) fail(ErrorKind::PoleAtSample, "a denominator of the four-summand expression vanishes");
    return q;
  };
  // Orbit through eK.
  const Rational l1 = (a - g) / nonzero(z - x);
  const Rational s1 = power(g - a, 3) /
                      (power(z - x, 4) * nonzero(a + l1 * x) * nonzero(a + l1 * x + b + l1 * y) *
                       nonzero(a + l1 * x - (b + l1 * y)));
  const Rational l2 = (a + g) / nonzero(x + z);
  const Rational s2 = power(a + g, 3) /
                      (power(z + x, 4) * nonzero(a - l2 * x) * nonzero(a - l2 * x + b - l2 * y) *
                       nonzero(a - l2 * x - b + l2 * y));
  const Rational l3 = (g - b) / nonzero(y - z);
  const Rational s3 = power(g - b, 3) /
                      (power(z - y, 4) * nonzero(b + l3 * y) * nonzero(b + l3 * y + a + l3 * x) *
                       nonzero(b + l3 * y - (a + l3 * x)));
  const Rational l4 = (g + b) / nonzero(y + z);
  const Rational s4 = power(b + g, 3) /
                      (power(z + y, 4) * nonzero(b - l4 * y) * nonzero(b - l4 * y - a + l4 * x) *
                       nonzero(b - l4 * y + a - l4 * x));
  const Rational bracket = s1 - s2 + s3 - s4;
  return PiScalar(Rational(-1, 3) * bracket, 4);
}

PiScalar stiefel_closed_form(const std::array<Rational, 3>& xyz) {
  const auto& [x, y, z] = xyz;
  const Rational denom = 3 * (z * z - y * y) * (z * z - x * x);
  if (denom == 0) fail(ErrorKind::PoleAtSample, "closed form has a pole at z^2 = x^2 or z^2 = y^2");
  return PiScalar(Rational(2) / denom, 4);
}

namespace fixtures {

RootData stiefel_so5_so3() {
  std::vector<Covector> roots = {Covector{-1, 0, 0}, Covector{-1, -1, 0}, Covector{-1, 1, 0}};
  std::vector<Matrix> reps = {
      Matrix::identity(3),
      Matrix::from_rows({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
      Matrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
      Matrix::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}),
  };
  return RootData(3, std::move(roots), std::move(reps), Vector{0, 0, 1}, Covector{-1, 0, 1}, PiScalar::two_pi());
}

}  // namespace fixtures

}  // namespace abbvloc
