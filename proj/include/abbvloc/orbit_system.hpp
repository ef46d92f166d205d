#pragma once

#include <cstddef>
#include <vector>

#include "abbvloc/linalg.hpp"
#include "abbvloc/pi_scalar.hpp"

namespace abbvloc {

/// One isolated closed leaf L_k.
struct OrbitDatum {
  /// l_k, the integral of the contact form over L_k.
  PiScalar length;
  /// phi_k with phi_k(v) = eta(v^#) along L_k.
  Covector moment;
  /// Transverse isotropy weights, as covectors on t that annihilate b.
  std::vector<Covector> weights;
};

/// Closed-leaf data of a Killing foliation with isolated closed leaves.
///
/// Weight covectors are stored as rationals; the actual weights are
/// weight_scale * weights[j].
class OrbitSystem {
 public:
  /// Validates every invariant: dimensions, alpha(b) = 0, moment(b) = 1,
  /// nonzero weights, nonzero weight scale. Throws InvalidInput.
  OrbitSystem(std::size_t dim_t, Vector b, std::size_t codim_half, std::vector<OrbitDatum> orbits,
              PiScalar weight_scale = PiScalar(1));

  std::size_t dim_t() const { return dim_t_; }
  const Vector& b() const { return b_; }
  /// n, half the real codimension.
  std::size_t codim_half() const { return codim_half_; }
  const std::vector<OrbitDatum>& orbits() const { return orbits_; }
  const PiScalar& weight_scale() const { return weight_scale_; }

  /// Copy with every weight covector multiplied by c.
  OrbitSystem with_scaled_weights(const Rational& c) const;

 private:
  std::size_t dim_t_;
  Vector b_;
  std::size_t codim_half_;
  std::vector<OrbitDatum> orbits_;
  PiScalar weight_scale_;
};

/// Deformed Sasakian sphere S^{2n+1} with Reeb element b_w = sum w_i e_i:
/// l_k = 2pi/w_k, phi_k = e_k^* / w_k, alpha^k_j = (w_j/w_k) e_k^* - e_j^*.
/// Requires positive, pairwise distinct weights (isolated closed leaves).
OrbitSystem weighted_sphere_system(const std::vector<Rational>& w);

/// Same weight pattern without the distinctness requirement and with unit
/// lengths; w = (1,...,1) gives the round pattern alpha^k_j = e_k^* - e_j^*.
OrbitSystem sphere_weight_pattern(const std::vector<Rational>& w);

/// 2 pi^{n+1} / (n! * prod w_i)
PiScalar weighted_sphere_volume_closed_form(const std::vector<Rational>& w);

}  // namespace abbvloc
