#include "abbvloc/secondary.hpp"

#include "abbvloc/localization.hpp"

namespace abbvloc {
namespace {

void require_distinct(const std::vector<Rational>& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] == w[j]) fail(ErrorKind::InvalidInput, "weights must be pairwise distinct");
}

}  // namespace

WeightedSphereFoliation::WeightedSphereFoliation(std::vector<Rational> w) : w_(std::move(w)) {
  if (w_.size() < 2) fail(ErrorKind::InvalidInput, "need m + 1 >= 2 weights");
  for (const auto& x : w_)
    if (x <= 0) fail(ErrorKind::InvalidInput, "weights must be positive");
  require_distinct(w_);
}

OrbitSystem WeightedSphereFoliation::orbit_system() const { return weighted_sphere_system(w_); }

std::vector<Rational> u1_leaf_integrals(const WeightedSphereFoliation& f) {
  Rational total = 0;
  for (const auto& x : f.w()) total += x;
  std::vector<Rational> out;
  for (const auto& x : f.w()) out.push_back(total / x);
  return out;
}

Rational asuke_number(const WeightedSphereFoliation& f, const Multiindex& J, const Vector& v) {
  if (J.weight() != f.m())
    fail(ErrorKind::InvalidInput, "multi-index " + J.to_string() + " must have weight m = " + std::to_string(f.m()));
  std::vector<PiScalar> leaves;
  for (auto& x : u1_leaf_integrals(f)) leaves.emplace_back(x);
  const PiScalar value = localize_characteristic(f.orbit_system(), J, leaves, v);
  return value.coeff();
}

Rational asuke_closed_form(const WeightedSphereFoliation& f, const Multiindex& J) {
  const auto& w = f.w();
  return elementary_symmetric(1, w) * s_J(J, w) / elementary_symmetric(f.m() + 1, w);
}

W1Sides w1_identity_sides(const Multiindex& J, const std::vector<Rational>& w) {
  require_distinct(w);
  W1Sides sides{0, s_J(J, w)};
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::vector<Rational> diffs;
    Rational others = 1;
    Rational denom = 1;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j == k) continue;
      diffs.push_back(w[j] - w[k]);
      others *= w[j];
      denom *= w[j] - w[k];
    }
    sides.lhs += s_J(J, diffs) * others / denom;
  }
  return sides;
}

bool check_w1_identity(const Multiindex& J, const std::vector<Rational>& w) {
  const auto sides = w1_identity_sides(J, w);
  return sides.lhs == sides.rhs;
}

}  // namespace abbvloc
