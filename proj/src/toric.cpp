#include "abbvloc/toric.hpp"

#include <algorithm>
#include <string>

#include "abbvloc/error.hpp"
#include "subsets.hpp"

namespace abbvloc {
namespace {

// Columns (first, normals[ids]...) with `slot` optionally replaced by x.
Matrix frame(const Vector& first, const std::vector<Vector>& normals, const std::vector<std::size_t>& ids) {
  std::vector<Vector> cols;
  cols.push_back(first);
  for (auto i : ids) cols.push_back(normals[i]);
  return Matrix::from_columns(std::span<const Vector>(cols));
}

Rational det_with(const Vector& first, const std::vector<Vector>& normals, const std::vector<std::size_t>& ids,
                  std::size_t slot, const Vector& x) {
  Matrix m = frame(first, normals, ids);
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, slot + 1) = x[r];
  return det(m);
}

}  // namespace

GoodCone::GoodCone(std::size_t dim, Matrix lattice_basis, int pi_scale_exponent, std::vector<Vector> normals,
                   Vector reeb)
    : dim_(dim),
      lattice_basis_(std::move(lattice_basis)),
      pi_scale_exponent_(pi_scale_exponent),
      normals_(std::move(normals)),
      reeb_(std::move(reeb)) {
  if (dim_ < 2) fail(ErrorKind::InvalidInput, "cone dimension must be at least 2");
  if (lattice_basis_.rows() != dim_ || lattice_basis_.cols() != dim_)
    fail(ErrorKind::InvalidInput, "lattice basis must be dim x dim");
  if (pi_scale_exponent_ != 0 && pi_scale_exponent_ != 1)
    fail(ErrorKind::InvalidInput, "pi_scale_exponent must be 0 or 1");
  if (det(lattice_basis_) == 0) fail(ErrorKind::InvalidInput, "lattice basis is singular");
  lattice_basis_inverse_ = inverse(lattice_basis_);
  if (reeb_.size() != dim_) fail(ErrorKind::InvalidInput, "Reeb vector has the wrong dimension");
  if (normals_.size() < dim_)
    fail(ErrorKind::InvalidInput, "a cone in dimension " + std::to_string(dim_) + " needs at least that many normals");
  for (const auto& v : normals_) {
    if (v.size() != dim_) fail(ErrorKind::InvalidInput, "normal has the wrong dimension");
    for (const auto& x : v)
      if (!is_integer(x)) fail(ErrorKind::InvalidInput, "normal " + to_string(v) + " is not a lattice vector");
    if (content(v.entries()) != 1)
      fail(ErrorKind::GoodnessViolation, "normal " + to_string(v) + " is not primitive");
  }
  reeb_lattice_ = apply(lattice_basis_inverse_, reeb_);
}

Vector GoodCone::to_lattice(const Vector& x) const { return apply(lattice_basis_inverse_, x); }

Covector GoodCone::covector_to_lattice(const Covector& phi) const { return pullback(phi, lattice_basis_); }

Covector GoodCone::covector_from_lattice(const Covector& phi_lattice) const {
  return pullback(phi_lattice, lattice_basis_inverse_);
}

GoodCone GoodCone::with_permuted_normals(const std::vector<std::size_t>& order) const {
  std::vector<Vector> normals;
  for (auto i : order) normals.push_back(normals_.at(i));
  return GoodCone(dim_, lattice_basis_, pi_scale_exponent_, std::move(normals), reeb_);
}

std::vector<ToricOrbit> enumerate_vertices(const GoodCone& cone) {
  const std::size_t d = cone.dim();
  const std::size_t n = cone.n();
  const auto& normals = cone.normals();
  const Vector& b = cone.reeb_lattice();

  if (rank(Matrix::from_rows(std::span<const Vector>(normals))) != d)
    fail(ErrorKind::UnboundedSection, "normals do not span t; the cone contains a line");

  std::vector<ToricOrbit> orbits;
  detail::for_each_subset(normals.size(), n, [&](const std::vector<std::size_t>& subset) {
    const Matrix cols = frame(b, normals, subset);
    const Rational delta = det(cols);
    if (delta == 0) return;
    // phi(b) = 1 and phi(v_i) = 0 for i in the subset.
    Vector rhs(d);
    rhs[0] = 1;
    const Vector sol = solve_linear(cols.transposed(), rhs);
    const Covector phi(sol.entries());
    std::vector<std::size_t> active;
    for (std::size_t j = 0; j < normals.size(); ++j) {
      const Rational value = pair(phi, normals[j]);
      if (value > 0) return;
      if (value == 0) active.push_back(j);
    }
    if (active.size() != n)
      fail(ErrorKind::NotSimpleVertex, "vertex " + to_string(cone.covector_from_lattice(phi)) + " lies on " +
                                           std::to_string(active.size()) + " facets, expected " + std::to_string(n));
    ToricOrbit orbit;
    orbit.vertex_lattice = phi;
    orbit.vertex = cone.covector_from_lattice(phi);
    orbit.facet_indices = subset;
    orbit.ordered_normals = subset;
    orbit.delta = delta;
    if (delta < 0 && n >= 2) {
      std::swap(orbit.ordered_normals[0], orbit.ordered_normals[1]);
      orbit.delta = -delta;
    }
    orbit.orientation = sign(orbit.delta);
    orbits.push_back(std::move(orbit));
  });

  if (orbits.empty()) fail(ErrorKind::UnboundedSection, "no vertex found; the section phi(b) = 1 is empty or unbounded");

  for (const auto& orbit : orbits) {
    // Every edge leaving the vertex must end on another facet.
    for (std::size_t drop = 0; drop < n; ++drop) {
      Matrix rows(d, d);
      Vector rhs(d);
      for (std::size_t c = 0; c < d; ++c) rows(0, c) = b[c];
      for (std::size_t i = 0; i < n; ++i) {
        const auto& nv = normals[orbit.facet_indices[i]];
        for (std::size_t c = 0; c < d; ++c) rows(i + 1, c) = nv[c];
        rhs[i + 1] = i == drop ? Rational(-1) : Rational(0);
      }
      const Covector dir(solve_linear(rows, rhs).entries());
      bool blocked = false;
      for (std::size_t j = 0; j < normals.size() && !blocked; ++j)
        blocked = pair(dir, normals[j]) > 0;
      if (!blocked)
        fail(ErrorKind::UnboundedSection,
             "an edge from vertex " + to_string(orbit.vertex) + " is an unbounded ray; b is not a Reeb-type vector");
    }
    // Lerman's goodness: the facet normals at a vertex span a direct summand.
    std::vector<Vector> rows;
    for (auto i : orbit.facet_indices) rows.push_back(normals[i]);
    for (const auto& divisor : smith_normal_form(Matrix::from_rows(std::span<const Vector>(rows))))
      if (divisor != 1)
        fail(ErrorKind::GoodnessViolation, "normals at vertex " + to_string(orbit.vertex) +
                                               " have elementary divisor " + divisor.get_str());
  }

  std::sort(orbits.begin(), orbits.end(),
            [](const ToricOrbit& a, const ToricOrbit& b) { return a.vertex < b.vertex; });
  return orbits;
}

OrbitSystem orbit_system_from_cone(const GoodCone& cone) {
  const std::size_t d = cone.dim();
  const std::size_t n = cone.n();
  const int s = cone.pi_scale_exponent();
  const Vector& b = cone.reeb_lattice();

  std::vector<OrbitDatum> data;
  for (const auto& orbit : enumerate_vertices(cone)) {
    OrbitDatum datum;
    // det_lattice(b, v^L) = (2pi)^{-s} delta, so l = (2pi)^s / |delta|.
    datum.length = PiScalar(power(Rational(2), s) / abs(orbit.delta), s);
    Covector moment(d);
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<Vector> cols{Vector::unit(d, c)};
      for (auto i : orbit.ordered_normals) cols.push_back(cone.normals()[i]);
      moment[c] = det_columns(cols) / orbit.delta;
    }
    datum.moment = cone.covector_from_lattice(moment);
    for (std::size_t slot = 0; slot < n; ++slot) {
      Covector w(d);
      for (std::size_t c = 0; c < d; ++c)
        w[c] = det_with(b, cone.normals(), orbit.ordered_normals, slot, Vector::unit(d, c)) / orbit.delta;
      datum.weights.push_back(cone.covector_from_lattice(w));
    }
    data.push_back(std::move(datum));
  }
  // 2pi * det(b, .., v, ..)/det(b, v^L) loses one factor (2pi)^{-s}.
  PiScalar scale(power(Rational(2), 1 - s), 1 - s);
  return OrbitSystem(d, cone.reeb(), n, std::move(data), std::move(scale));
}

PiScalar toric_volume(const GoodCone& cone, const Vector& v) {
  if (v.size() != cone.dim()) fail(ErrorKind::DimensionMismatch, "sample vector has the wrong dimension");
  const std::size_t n = cone.n();
  const long s = cone.pi_scale_exponent();
  const Vector& b = cone.reeb_lattice();
  const Vector x = cone.to_lattice(v);

  Rational sum = 0;
  for (const auto& orbit : enumerate_vertices(cone)) {
    Rational denom = orbit.delta;
    for (std::size_t slot = 0; slot < n; ++slot) {
      const Rational f = det_with(b, cone.normals(), orbit.ordered_normals, slot, x);
      if (f == 0) fail(ErrorKind::PoleAtSample, "det(b, .., v, ..) vanishes at v = " + to_string(v));
      denom *= f;
    }
    const Rational top = det(frame(x, cone.normals(), orbit.ordered_normals));
    sum += orbit.orientation * power(top, static_cast<long>(n)) / denom;
  }
  // Each lattice determinant carries (2pi)^{-s} per occurrence of b or v:
  // net factor (2pi)^{s(n+1)}.
  const long grade = s * static_cast<long>(n + 1);
  const Rational prefactor =
      power(Rational(2), grade) / (power(Rational(2), static_cast<long>(n)) * factorial(static_cast<unsigned>(n)));
  return PiScalar(prefactor * sum, grade);
}

namespace fixtures {
namespace {

std::vector<Vector> negative_unit_normals(std::size_t d) {
  std::vector<Vector> normals;
  for (std::size_t i = 0; i < d; ++i) normals.push_back(-Vector::unit(d, i));
  return normals;
}

}  // namespace

GoodCone weighted_sphere_cone(const std::vector<Rational>& w) {
  const std::size_t d = w.size();
  return GoodCone(d, Matrix::identity(d), 1, negative_unit_normals(d), Vector(w));
}

GoodCone simplex_cone(const std::vector<Rational>& reeb) {
  const std::size_t d = reeb.size();
  return GoodCone(d, Matrix::identity(d), 0, negative_unit_normals(d), Vector(reeb));
}

GoodCone conifold_cone(const std::vector<Rational>& reeb) {
  std::vector<Vector> normals = {
      Vector{-1, 0, 0},
      Vector{-1, -1, 0},
      Vector{-1, -1, -1},
      Vector{-1, 0, -1},
  };
  return GoodCone(3, Matrix::identity(3), 1, std::move(normals), Vector(reeb));
}

}  // namespace fixtures

}  // namespace abbvloc
