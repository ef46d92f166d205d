#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "abbvloc/orbit_system.hpp"
#include "abbvloc/symmetric.hpp"

namespace abbvloc {

/// Restriction of an equivariant class to L_k, evaluated at v.
using OrbitNumerator = std::function<Rational(std::size_t k, const OrbitDatum& orbit, const Vector& v)>;

/// Any exact v-dependent quantity whose v-independence is to be checked.
using SampledQuantity = std::function<PiScalar(const Vector& v)>;

/// prod_j alpha_j^k(v), including the system's weight scale. Throws
/// PoleAtSample when a factor vanishes.
PiScalar euler_denominator(const OrbitSystem& sys, std::size_t k, const Vector& v);

/// (-2pi)^n * sum_k l_k * numerator_k(v) / prod_j alpha_j^k(v).
PiScalar localized_sum(const OrbitSystem& sys, const Vector& v, const OrbitNumerator& numerator);

/// (pi^n / n!) * sum_k l_k * phi_k(v)^n / prod_j alpha_j^k(v).
PiScalar localize_volume(const OrbitSystem& sys, const Vector& v);

/// Numerator (-1)^n phi_k(v)^n / (2^n n!), which turns localized_sum into
/// localize_volume.
OrbitNumerator volume_numerator(std::size_t n);

struct SampleOutcome {
  PiScalar value;
  std::vector<Vector> samples_used;
  std::size_t rejected_poles = 0;
};

/// Raised when two pole-free samples give different exact values.
class InconsistentSamplesError : public Error {
 public:
  InconsistentSamplesError(PiScalar first, Vector first_v, PiScalar second, Vector second_v);

  const PiScalar& first_value() const { return first_value_; }
  const PiScalar& second_value() const { return second_value_; }
  const Vector& first_sample() const { return first_v_; }
  const Vector& second_sample() const { return second_v_; }

 private:
  PiScalar first_value_;
  Vector first_v_;
  PiScalar second_value_;
  Vector second_v_;
};

inline constexpr std::size_t kPoleRetryBudget = 100;

/// Evaluates `quantity` at `samples` seeded random pole-free v in Q^dim and
/// requires exact agreement. Pole draws are skipped; after kPoleRetryBudget
/// of them AllSamplesPoles is raised.
SampleOutcome check_v_independence(std::size_t dim, const SampledQuantity& quantity, std::size_t samples,
                                   std::uint64_t seed);

/// The same check applied to localized_sum(sys, v, numerator).
SampleOutcome check_v_independence(const OrbitSystem& sys, const OrbitNumerator& numerator,
                                   std::size_t samples, std::uint64_t seed);

/// Coefficients c_0..c_order of the localized Duistermaat-Heckman series,
/// c_s = pi^n sum_k l_k phi_k(v)^s / (s! prod_j alpha_j^k(v)).
std::vector<PiScalar> dh_series(const OrbitSystem& sys, const Vector& v, std::size_t order);

/// sum_k leaf_integrals[k] * s_J(alpha^k(v)) / s_n(alpha^k(v)).
PiScalar localize_characteristic(const OrbitSystem& sys, const Multiindex& J,
                                 const std::vector<PiScalar>& leaf_integrals, const Vector& v);

}  // namespace abbvloc
