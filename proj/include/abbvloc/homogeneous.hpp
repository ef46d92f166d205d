#pragma once

#include <array>
#include <vector>

#include "abbvloc/linalg.hpp"
#include "abbvloc/pi_scalar.hpp"

namespace abbvloc {

/// Root-system data of a homogeneous Sasakian manifold G/K over G/H.
class RootData {
 public:
  /// Checks dimensions, p(b) = 1 and invertibility of every Weyl
  /// representative. Throws InvalidInput.
  RootData(std::size_t dim_t, std::vector<Covector> roots, std::vector<Matrix> weyl_reps, Vector b, Covector p,
           PiScalar orbit_length = PiScalar(1));

  std::size_t dim_t() const { return dim_t_; }
  /// Delta_G \ Delta_H, as covectors on t.
  const std::vector<Covector>& roots() const { return roots_; }
  /// Coset representatives of W(G)/W(H) acting on t; Ad_{w^{-1}} is
  /// application of the stored matrix.
  const std::vector<Matrix>& weyl_reps() const { return weyl_reps_; }
  const Vector& b() const { return b_; }
  /// Projection t -> R b -> R along t cap k, with p(b) = 1.
  const Covector& p() const { return p_; }
  /// Common length of the undeformed Reeb orbits.
  const PiScalar& orbit_length() const { return orbit_length_; }

 private:
  std::size_t dim_t_;
  std::vector<Covector> roots_;
  std::vector<Matrix> weyl_reps_;
  Vector b_;
  Covector p_;
  PiScalar orbit_length_;
};

/// Volume of the deformation with Reeb element b_prime:
/// (pi^n/n!) l sum_w p(A b')^{-(n+1)} p(A v)^n / prod_alpha alpha(A(v - lambda b')),
/// A = Ad_{w^{-1}}, lambda = p(A v)/p(A b'), n = #roots.
/// Throws DegenerateReeb when some p(A b') = 0 and PoleAtSample when a root
/// factor vanishes.
PiScalar homogeneous_volume(const RootData& rd, const Vector& b_prime, const Vector& v);

/// The four localized summands for SO(5)/SO(3) written out term by term,
/// times -2 pi^4 / 3!. xyz is the Reeb element, abc the sample vector.
PiScalar stiefel_four_sum(const std::array<Rational, 3>& xyz, const std::array<Rational, 3>& abc);

/// 2 pi^4 / (3 (z^2 - y^2)(z^2 - x^2))
PiScalar stiefel_closed_form(const std::array<Rational, 3>& xyz);

namespace fixtures {

/// SO(5)/SO(3) with torus T^2 x T^1: roots -e1*, -(e1*+e2*), -(e1*-e2*),
/// p = (-1, 0, 1), b = (0, 0, 1), orbit length 2pi, and the four Weyl
/// representatives (a,b,c) -> (a,b,c), (-a,b,c), (b,a,c), (-b,a,c).
RootData stiefel_so5_so3();

}  // namespace fixtures

}  // namespace abbvloc
