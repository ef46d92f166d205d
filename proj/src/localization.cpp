#include "abbvloc/localization.hpp"

#include "abbvloc/sampling.hpp"

namespace abbvloc {
namespace {

std::vector<Rational> weight_values(const OrbitDatum& orbit, const Vector& v) {
  std::vector<Rational> values;
  values.reserve(orbit.weights.size());
  for (const auto& w : orbit.weights) values.push_back(pair(w, v));
  return values;
}

void check_sample(const OrbitSystem& sys, const Vector& v) {
  if (v.size() != sys.dim_t()) fail(ErrorKind::DimensionMismatch, "sample vector has the wrong dimension");
}

}  // namespace

PiScalar euler_denominator(const OrbitSystem& sys, std::size_t k, const Vector& v) {
  check_sample(sys, v);
  Rational prod = 1;
  for (const auto& value : weight_values(sys.orbits()[k], v)) {
    if (value == 0)
      fail(ErrorKind::PoleAtSample, "weight vanishes at v = " + to_string(v) + " on orbit " + std::to_string(k));
    prod *= value;
  }
  return PiScalar(prod) * sys.weight_scale().pow(static_cast<long>(sys.codim_half()));
}

PiScalar localized_sum(const OrbitSystem& sys, const Vector& v, const OrbitNumerator& numerator) {
  const long n = static_cast<long>(sys.codim_half());
  PiScalar total;
  for (std::size_t k = 0; k < sys.orbits().size(); ++k) {
    const auto& orbit = sys.orbits()[k];
    const PiScalar denom = euler_denominator(sys, k, v);
    total += orbit.length * PiScalar(numerator(k, orbit, v)) / denom;
  }
  return PiScalar(Rational(-2), 1).pow(n) * total;
}

OrbitNumerator volume_numerator(std::size_t n) {
  const long e = static_cast<long>(n);
  Rational c = power(Rational(-1, 2), e) / factorial(static_cast<unsigned>(n));
  return [c, e](std::size_t, const OrbitDatum& orbit, const Vector& v) -> Rational {
    return c * power(pair(orbit.moment, v), e);
  };
}

PiScalar localize_volume(const OrbitSystem& sys, const Vector& v) {
  return localized_sum(sys, v, volume_numerator(sys.codim_half()));
}

InconsistentSamplesError::InconsistentSamplesError(PiScalar first, Vector first_v, PiScalar second, Vector second_v)
    : Error(ErrorKind::InconsistentSamples, "value " + first.to_string() + " at v = " + to_string(first_v) +
                                                " differs from " + second.to_string() + " at v = " +
                                                to_string(second_v)),
      first_value_(std::move(first)),
      first_v_(std::move(first_v)),
      second_value_(std::move(second)),
      second_v_(std::move(second_v)) {}

SampleOutcome check_v_independence(std::size_t dim, const SampledQuantity& quantity, std::size_t samples,
                                   std::uint64_t seed) {
  if (samples < 2) fail(ErrorKind::InvalidInput, "v-independence needs at least two samples");
  RationalSampler sampler(seed);
  SampleOutcome out;
  while (out.samples_used.size() < samples) {
    Vector v = sampler.vector(dim);
    PiScalar value;
    try {
      value = quantity(v);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleAtSample) throw;
      if (++out.rejected_poles >= kPoleRetryBudget)
        fail(ErrorKind::AllSamplesPoles,
             std::to_string(out.rejected_poles) + " sampled v hit a pole; weight data is likely malformed");
      continue;
    }
    if (out.samples_used.empty()) {
      out.value = value;
    } else if (!(value == out.value)) {
      throw InconsistentSamplesError(out.value, out.samples_used.front(), value, v);
    }
    out.samples_used.push_back(std::move(v));
  }
  return out;
}

SampleOutcome check_v_independence(const OrbitSystem& sys, const OrbitNumerator& numerator, std::size_t samples,
                                   std::uint64_t seed) {
  return check_v_independence(
      sys.dim_t(), [&](const Vector& v) { return localized_sum(sys, v, numerator); }, samples, seed);
}

std::vector<PiScalar> dh_series(const OrbitSystem& sys, const Vector& v, std::size_t order) {
  const long n = static_cast<long>(sys.codim_half());
  std::vector<PiScalar> coeffs(order + 1);
  for (std::size_t k = 0; k < sys.orbits().size(); ++k) {
    const auto& orbit = sys.orbits()[k];
    const PiScalar base = orbit.length / euler_denominator(sys, k, v);
    const Rational phi = pair(orbit.moment, v);
    Rational phi_pow = 1;
    for (std::size_t s = 0; s <= order; ++s) {
      coeffs[s] += base * PiScalar(phi_pow / factorial(static_cast<unsigned>(s)));
      phi_pow *= phi;
    }
  }
  for (auto& c : coeffs) c = c * PiScalar::pi(n);
  return coeffs;
}

PiScalar localize_characteristic(const OrbitSystem& sys, const Multiindex& J,
                                 const std::vector<PiScalar>& leaf_integrals, const Vector& v) {
  check_sample(sys, v);
  const int n = static_cast<int>(sys.codim_half());
  if (J.weight() > n)
    fail(ErrorKind::InvalidInput, "multi-index " + J.to_string() + " exceeds the codimension");
  if (leaf_integrals.size() != sys.orbits().size())
    fail(ErrorKind::InvalidInput, "need exactly one leaf integral per closed orbit");
  const PiScalar scale = sys.weight_scale().pow(J.weight() - n);
  PiScalar total;
  for (std::size_t k = 0; k < sys.orbits().size(); ++k) {
    const auto alphas = weight_values(sys.orbits()[k], v);
    const Rational top = elementary_symmetric(n, alphas);
    if (top == 0)
      fail(ErrorKind::PoleAtSample, "top symmetric polynomial vanishes at v = " + to_string(v));
    total += leaf_integrals[k] * PiScalar(s_J(J, alphas) / top);
  }
  return total * scale;
}

}  // namespace abbvloc
