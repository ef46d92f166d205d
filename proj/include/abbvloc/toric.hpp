#pragma once

#include <cstddef>
#include <vector>

#include "abbvloc/linalg.hpp"
#include "abbvloc/orbit_system.hpp"
#include "abbvloc/pi_scalar.hpp"

namespace abbvloc {

/// Good rational polyhedral cone Delta = {phi : phi(v_i) <= 0} with Reeb
/// element b.
///
/// Coordinates: `reeb` and sample vectors v are given in working coordinates
/// of t. The integral lattice is generated by (2pi)^pi_scale_exponent times
/// the columns of `lattice_basis`, and `normals` are integer coordinates with
/// respect to that lattice basis. Determinants are taken in lattice
/// coordinates; the 2pi factors are carried as pi-grading of the outputs.
class GoodCone {
 public:
  /// Validates shapes, invertibility of the lattice basis, integrality and
  /// primitivity of every normal. Throws InvalidInput or GoodnessViolation.
  GoodCone(std::size_t dim, Matrix lattice_basis, int pi_scale_exponent, std::vector<Vector> normals, Vector reeb);

  std::size_t dim() const { return dim_; }
  /// n = dim - 1
  std::size_t n() const { return dim_ - 1; }
  const Matrix& lattice_basis() const { return lattice_basis_; }
  int pi_scale_exponent() const { return pi_scale_exponent_; }
  const std::vector<Vector>& normals() const { return normals_; }
  const Vector& reeb() const { return reeb_; }

  /// b in rational lattice coordinates (lattice_basis^{-1} b).
  const Vector& reeb_lattice() const { return reeb_lattice_; }
  /// lattice_basis^{-1} x
  Vector to_lattice(const Vector& x) const;
  /// phi o lattice_basis: coordinates of a working covector in the dual basis.
  Covector covector_to_lattice(const Covector& phi) const;
  /// Inverse of covector_to_lattice.
  Covector covector_from_lattice(const Covector& phi_lattice) const;

  GoodCone with_permuted_normals(const std::vector<std::size_t>& order) const;

 private:
  std::size_t dim_;
  Matrix lattice_basis_;
  Matrix lattice_basis_inverse_;
  int pi_scale_exponent_;
  std::vector<Vector> normals_;
  Vector reeb_;
  Vector reeb_lattice_;
};

/// A closed Reeb orbit L, i.e. a vertex Phi(L) of Delta_1.
struct ToricOrbit {
  /// Phi(L) as a covector on working coordinates.
  Covector vertex;
  /// Phi(L) in lattice coordinates.
  Covector vertex_lattice;
  /// Indices i with Phi(L)(v_i) = 0, ascending.
  std::vector<std::size_t> facet_indices;
  /// The same indices, ordered so that det(b, v_1^L, ..., v_n^L) > 0. For
  /// n = 1 no reordering is possible and `orientation` records the sign.
  std::vector<std::size_t> ordered_normals;
  /// det(b, v_1^L, ..., v_n^L) in lattice coordinates for `ordered_normals`.
  Rational delta;
  /// sign(delta): +1 except for n = 1 cones where it may be -1.
  int orientation = 1;
};

/// Vertices of Delta_1 in lexicographic order of `vertex`. Throws
/// GoodnessViolation, UnboundedSection or NotSimpleVertex.
std::vector<ToricOrbit> enumerate_vertices(const GoodCone& cone);

/// Closed-orbit data for the localization engine: lengths 1/det(b, v^L),
/// moments det(v, v^L)/det(b, v^L) and weights
/// 2pi det(b, ..., v, ...)/det(b, v^L).
OrbitSystem orbit_system_from_cone(const GoodCone& cone);

/// Toric Sasakian volume
/// 1/(2^n n!) sum_L [1/det(b,v^L)] det(v,v^L)^n / prod_i det(b,v_1^L,..,v,..,v_n^L).
PiScalar toric_volume(const GoodCone& cone, const Vector& v);

namespace fixtures {

/// Cone of the deformed sphere S^{2n+1}: lattice 2pi e_i, normals -e_i, b = w.
GoodCone weighted_sphere_cone(const std::vector<Rational>& w);
/// Normals -e_i with identity lattice basis and no 2pi scaling.
GoodCone simplex_cone(const std::vector<Rational>& reeb);
/// Cone over a square (the conifold link T^{1,1}); lattice 2pi e_i.
GoodCone conifold_cone(const std::vector<Rational>& reeb);

}  // namespace fixtures

}  // namespace abbvloc
