#include "abbvloc/orbit_system.hpp"

#include <string>

namespace abbvloc {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InvalidInput, what);
}

}  // namespace

OrbitSystem::OrbitSystem(std::size_t dim_t, Vector b, std::size_t codim_half, std::vector<OrbitDatum> orbits,
                         PiScalar weight_scale)
    : dim_t_(dim_t),
      b_(std::move(b)),
      codim_half_(codim_half),
      orbits_(std::move(orbits)),
      weight_scale_(std::move(weight_scale)) {
  require(dim_t_ > 0, "dim_t must be positive");
  require(codim_half_ > 0, "codim_half must be positive");
  require(b_.size() == dim_t_, "b has the wrong dimension");
  require(!orbits_.empty(), "an orbit system needs at least one closed orbit");
  require(!weight_scale_.is_zero(), "weight scale must be nonzero");
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    const auto& o = orbits_[k];
    const std::string where = "orbit " + std::to_string(k) + ": ";
    require(o.moment.size() == dim_t_, where + "moment covector has the wrong dimension");
    require(pair(o.moment, b_) == 1, where + "moment(b) must equal 1");
    require(o.weights.size() == codim_half_, where + "expected " + std::to_string(codim_half_) + " weights");
    for (const auto& w : o.weights) {
      require(w.size() == dim_t_, where + "weight covector has the wrong dimension");
      require(!w.is_zero(), where + "weight covector is identically zero");
      require(pair(w, b_) == 0, where + "weight " + to_string(w) + " does not annihilate b");
    }
  }
}

OrbitSystem OrbitSystem::with_scaled_weights(const Rational& c) const {
  auto orbits = orbits_;
  for (auto& o : orbits)
    for (auto& w : o.weights) w *= c;
  return OrbitSystem(dim_t_, b_, codim_half_, std::move(orbits), weight_scale_);
}

namespace {

OrbitSystem sphere_system(const std::vector<Rational>& w, bool unit_lengths) {
  const std::size_t d = w.size();
  require(d >= 2, "a weighted sphere needs at least two weights");
  for (const auto& wi : w) require(wi > 0, "sphere weights must be positive");
  std::vector<OrbitDatum> orbits;
  for (std::size_t k = 0; k < d; ++k) {
    OrbitDatum o;
    o.length = unit_lengths ? PiScalar(1) : PiScalar(Rational(2) / w[k], 1);
    o.moment = Covector(d);
    o.moment[k] = 1 / w[k];
    for (std::size_t j = 0; j < d; ++j) {
      if (j == k) continue;
      Covector a(d);
      a[k] = w[j] / w[k];
      a[j] = -1;
      o.weights.push_back(std::move(a));
    }
    orbits.push_back(std::move(o));
  }
  return OrbitSystem(d, Vector(w), d - 1, std::move(orbits));
}

}  // namespace

OrbitSystem weighted_sphere_system(const std::vector<Rational>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      require(w[i] != w[j], "sphere weights must be pairwise distinct for isolated closed orbits");
  return sphere_system(w, false);
}

OrbitSystem sphere_weight_pattern(const std::vector<Rational>& w) { return sphere_system(w, true); }

PiScalar weighted_sphere_volume_closed_form(const std::vector<Rational>& w) {
  const long n = static_cast<long>(w.size()) - 1;
  Rational prod = 1;
  for (const auto& wi : w) prod *= wi;
  return PiScalar(Rational(2) / (factorial(static_cast<unsigned>(n)) * prod), n + 1);
}

}  // namespace abbvloc
