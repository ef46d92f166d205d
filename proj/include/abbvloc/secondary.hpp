#pragma once

#include <vector>

#include "abbvloc/linalg.hpp"
#include "abbvloc/orbit_system.hpp"
#include "abbvloc/symmetric.hpp"

namespace abbvloc {

/// Reeb foliation of the deformed sphere S^{2m+1} with weights w_0..w_m,
/// transversely Kaehler of complex codimension m.
class WeightedSphereFoliation {
 public:
  /// Requires m + 1 positive, pairwise distinct weights. Throws InvalidInput.
  explicit WeightedSphereFoliation(std::vector<Rational> w);

  int m() const { return static_cast<int>(w_.size()) - 1; }
  const std::vector<Rational>& w() const { return w_; }

  OrbitSystem orbit_system() const;

 private:
  std::vector<Rational> w_;
};

/// Integral of u_1 over each closed leaf: (w_0 + ... + w_m) / w_k.
std::vector<Rational> u1_leaf_integrals(const WeightedSphereFoliation& f);

/// u_1 s_J localized to the closed leaves at v. |J| must equal m.
Rational asuke_number(const WeightedSphereFoliation& f, const Multiindex& J, const Vector& v);

/// s_1 s_J / s_{m+1} evaluated at w.
Rational asuke_closed_form(const WeightedSphereFoliation& f, const Multiindex& J);

/// Both sides of
///   sum_k s_J((w_j - w_k)_{j != k}) prod_{j != k} w_j / prod_{j != k}(w_j - w_k) = s_J(w).
struct W1Sides {
  Rational lhs;
  Rational rhs;
};
W1Sides w1_identity_sides(const Multiindex& J, const std::vector<Rational>& w);

/// True iff the identity above holds exactly. w must be pairwise distinct.
bool check_w1_identity(const Multiindex& J, const std::vector<Rational>& w);

}  // namespace abbvloc
