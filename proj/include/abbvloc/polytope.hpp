#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "abbvloc/linalg.hpp"
#include "abbvloc/pi_scalar.hpp"
#include "abbvloc/sampling.hpp"
#include "abbvloc/toric.hpp"

namespace abbvloc {

struct PolytopeVertex {
  Covector point;
  /// Indices of the normals with point(v_i) = 0, ascending.
  std::vector<std::size_t> active;
};

/// Delta_1 = {phi : phi(v_i) <= 0, phi(b) = 1}, with its vertices. All
/// coordinates are with respect to one fixed basis of t, and volumes use
/// the form Omega_H normalized by b ^ Omega_H = det in that basis.
class HPolytope {
 public:
  /// Checks phi(b) = 1 and phi(v_i) <= 0 for every supplied vertex and
  /// recomputes active sets. Throws InvalidInput.
  HPolytope(std::vector<Vector> normals, Vector reeb, std::vector<Covector> vertices);

  /// Vertex enumeration from the H-representation alone: H is parametrized
  /// by an affine chart and each n-subset of constraints is solved in it.
  /// Throws UnboundedSection when the section is empty or unbounded.
  static HPolytope from_h_representation(std::vector<Vector> normals, Vector reeb);

  /// Delta_1 of a cone in rational lattice coordinates.
  static HPolytope from_cone(const GoodCone& cone);

  std::size_t ambient_dim() const { return reeb_.size(); }
  std::size_t n() const { return reeb_.size() - 1; }
  const std::vector<Vector>& normals() const { return normals_; }
  const Vector& reeb() const { return reeb_; }
  const std::vector<PolytopeVertex>& vertices() const { return vertices_; }

  bool is_simple() const;
  /// Pairs of vertex indices whose active sets share n - 1 normals.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  HPolytope() = default;
  void sort_vertices();

  std::vector<Vector> normals_;
  Vector reeb_;
  std::vector<PolytopeVertex> vertices_;
};

/// f(phi) = phi(u) + shift.
struct LinearFunctional {
  Vector u;
  Rational shift;

  Rational operator()(const Covector& phi) const { return pair(phi, u) + shift; }
};

/// Omega_H(e_1, ..., e_n) = det[w; e_1; ...; e_n] for any w with w(b) = 1.
/// Every edge must satisfy e(b) = 0 (InvalidInput otherwise).
Rational omega_h(const Vector& reeb, std::span<const Covector> edges, std::optional<Covector> aux = std::nullopt);

/// Independent oracle: recursive fan triangulation of the boundary from a
/// base vertex, summing |Omega_H| / n! over simplices.
Rational triangulation_volume(const HPolytope& p, std::size_t base_vertex = 0);

/// (1/n!) sum_L f(Phi(L))^n / (delta^L gamma_1^L ... gamma_n^L) where
/// u = gamma_0 b + sum gamma_i v_i^L. Throws EdgeConstantFunctional.
Rational lawrence_volume(const HPolytope& p, const LinearFunctional& f);

/// Draws functionals until one is nonconstant on every edge.
LinearFunctional sample_functional(const HPolytope& p, RationalSampler& sampler);

struct MsyCheck {
  PiScalar lhs;
  PiScalar rhs;
  bool equal = false;
  Vector v;
  LinearFunctional f;
};

/// toric_volume(cone, v) against 2 pi^{n+1} Vol_H(Delta_1), with Vol_H from
/// Lawrence's formula.
MsyCheck msy_check(const GoodCone& cone, std::uint64_t seed);

}  // namespace abbvloc
