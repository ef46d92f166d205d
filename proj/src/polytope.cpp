#include "abbvloc/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "abbvloc/error.hpp"
#include "subsets.hpp"

namespace abbvloc {
namespace {

std::vector<std::size_t> active_set(const Covector& phi, const std::vector<Vector>& normals) {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (pair(phi, normals[i]) == 0) active.push_back(i);
  return active;
}

std::size_t affine_rank(const std::vector<Covector>& points) {
  if (points.size() <= 1) return 0;
  std::vector<Covector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return rank(Matrix::from_rows(std::span<const Covector>(diffs)));
}

void require_simple(const HPolytope& p) {
  if (!p.is_simple()) fail(ErrorKind::NotSimpleVertex, "polytope has a vertex on more than n facets");
}

}  // namespace

HPolytope::HPolytope(std::vector<Vector> normals, Vector reeb, std::vector<Covector> vertices)
    : normals_(std::move(normals)), reeb_(std::move(reeb)) {
  if (reeb_.size() < 2) fail(ErrorKind::InvalidInput, "ambient dimension must be at least 2");
  for (const auto& v : normals_)
    if (v.size() != reeb_.size()) fail(ErrorKind::InvalidInput, "normal has the wrong dimension");
  for (auto& phi : vertices) {
    if (phi.size() != reeb_.size()) fail(ErrorKind::InvalidInput, "vertex has the wrong dimension");
    if (pair(phi, reeb_) != 1) fail(ErrorKind::InvalidInput, "vertex " + to_string(phi) + " is off the hyperplane phi(b) = 1");
    for (const auto& v : normals_)
      if (pair(phi, v) > 0) fail(ErrorKind::InvalidInput, "vertex " + to_string(phi) + " violates a facet inequality");
    vertices_.push_back({phi, active_set(phi, normals_)});
  }
  sort_vertices();
}

void HPolytope::sort_vertices() {
  std::sort(vertices_.begin(), vertices_.end(),
            [](const PolytopeVertex& a, const PolytopeVertex& b) { return a.point < b.point; });
}

HPolytope HPolytope::from_h_representation(std::vector<Vector> normals, Vector reeb) {
  const std::size_t d = reeb.size();
  if (d < 2) fail(ErrorKind::InvalidInput, "ambient dimension must be at least 2");
  for (const auto& v : normals)
    if (v.size() != d) fail(ErrorKind::InvalidInput, "normal has the wrong dimension");
  const std::size_t n = d - 1;

  // Affine chart of H: phi = base + sum_i x_i kernel[i].
  std::size_t pivot = 0;
  while (pivot < d && reeb[pivot] == 0) ++pivot;
  if (pivot == d) fail(ErrorKind::InvalidInput, "Reeb vector is zero");
  Covector base(d);
  base[pivot] = 1 / reeb[pivot];
  std::vector<Covector> kernel;
  for (std::size_t i = 0; i < d; ++i) {
    if (i == pivot) continue;
    Covector k(d);
    k[i] = 1;
    k[pivot] = -reeb[i] / reeb[pivot];
    kernel.push_back(std::move(k));
  }
  // Constraints a_r . x <= c_r.
  const std::size_t m = normals.size();
  Matrix a(m, n);
  Vector c(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < n; ++i) a(r, i) = pair(kernel[i], normals[r]);
    c[r] = -pair(base, normals[r]);
  }
  auto row_dot = [&](std::size_t r, const Vector& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += a(r, i) * x[i];
    return s;
  };

  std::map<std::vector<Rational>, Vector> found;  // chart point -> point
  detail::for_each_subset(m, n, [&](const std::vector<std::size_t>& subset) {
    Matrix sub(n, n);
    Vector rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) sub(i, j) = a(subset[i], j);
      rhs[i] = c[subset[i]];
    }
    if (rank(sub) < n) return;
    const Vector x = solve_linear(sub, rhs);
    for (std::size_t r = 0; r < m; ++r)
      if (row_dot(r, x) > c[r]) return;
    found.emplace(x.entries(), x);
  });
  if (found.empty()) fail(ErrorKind::UnboundedSection, "the section phi(b) = 1 has no vertex");

  HPolytope p;
  p.normals_ = std::move(normals);
  p.reeb_ = std::move(reeb);
  for (const auto& [key, x] : found) {
    Covector phi = base;
    for (std::size_t i = 0; i < n; ++i) phi += x[i] * kernel[i];
    std::vector<std::size_t> active;
    for (std::size_t r = 0; r < m; ++r)
      if (row_dot(r, x) == c[r]) active.push_back(r);
    if (active.size() == n) {
      // Each edge direction must run into another constraint.
      Matrix sub(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sub(i, j) = a(active[i], j);
      for (std::size_t e = 0; e < n; ++e) {
        Vector target(n);
        target[e] = -1;
        const Vector dir = solve_linear(sub, target);
        bool blocked = false;
        for (std::size_t r = 0; r < m && !blocked; ++r) blocked = row_dot(r, dir) > 0;
        if (!blocked) fail(ErrorKind::UnboundedSection, "the section phi(b) = 1 is unbounded");
      }
    }
    p.vertices_.push_back({std::move(phi), std::move(active)});
  }
  p.sort_vertices();
  return p;
}

HPolytope HPolytope::from_cone(const GoodCone& cone) {
  std::vector<Covector> vertices;
  for (const auto& orbit : enumerate_vertices(cone)) vertices.push_back(orbit.vertex_lattice);
  return HPolytope(cone.normals(), cone.reeb_lattice(), std::move(vertices));
}

bool HPolytope::is_simple() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [&](const PolytopeVertex& v) { return v.active.size() == n(); });
}

std::vector<std::pair<std::size_t, std::size_t>> HPolytope::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(vertices_[i].active.begin(), vertices_[i].active.end(), vertices_[j].active.begin(),
                            vertices_[j].active.end(), std::back_inserter(common));
      if (common.size() + 1 == n()) out.emplace_back(i, j);
    }
  return out;
}

Rational omega_h(const Vector& reeb, std::span<const Covector> edges, std::optional<Covector> aux) {
  const std::size_t d = reeb.size();
  if (edges.size() + 1 != d) fail(ErrorKind::InvalidInput, "Omega_H takes exactly n edge covectors");
  for (const auto& e : edges)
    if (pair(e, reeb) != 0) fail(ErrorKind::InvalidInput, "edge " + to_string(e) + " is not tangent to H");
  Covector w(d);
  if (aux) {
    if (pair(*aux, reeb) != 1) fail(ErrorKind::InvalidInput, "auxiliary covector must satisfy w(b) = 1");
    w = *aux;
  } else {
    std::size_t i = 0;
    while (i < d && reeb[i] == 0) ++i;
    if (i == d) fail(ErrorKind::InvalidInput, "Reeb vector is zero");
    w[i] = 1 / reeb[i];
  }
  std::vector<Covector> rows{w};
  rows.insert(rows.end(), edges.begin(), edges.end());
  return det_rows(rows);
}

namespace {

using Simplex = std::vector<std::size_t>;

// Triangulates the face spanned by `ids` (affine dimension k) as a cone from
// its first vertex over the facets that avoid it.
std::vector<Simplex> triangulate_face(const HPolytope& p, const std::vector<std::size_t>& ids, std::size_t k,
                                      std::size_t apex) {
  if (k == 0) return {Simplex{ids.front()}};
  const auto& verts = p.vertices();
  const auto& apex_active = verts[apex].active;
  std::set<std::vector<std::size_t>> seen;
  std::vector<Simplex> out;
  for (std::size_t facet = 0; facet < p.normals().size(); ++facet) {
    if (std::binary_search(apex_active.begin(), apex_active.end(), facet)) continue;
    std::vector<std::size_t> sub;
    for (auto id : ids)
      if (std::binary_search(verts[id].active.begin(), verts[id].active.end(), facet)) sub.push_back(id);
    if (sub.empty() || !seen.insert(sub).second) continue;
    std::vector<Covector> pts;
    for (auto id : sub) pts.push_back(verts[id].point);
    if (affine_rank(pts) != k - 1) continue;
    for (auto s : triangulate_face(p, sub, k - 1, sub.front())) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

Rational triangulation_volume(const HPolytope& p, std::size_t base_vertex) {
  const auto& verts = p.vertices();
  const std::size_t n = p.n();
  if (verts.empty()) return 0;
  if (base_vertex >= verts.size()) fail(ErrorKind::InvalidInput, "base vertex index out of range");
  std::vector<Covector> pts;
  for (const auto& v : verts) pts.push_back(v.point);
  if (affine_rank(pts) < n) return 0;

  std::vector<std::size_t> ids(verts.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  Rational total = 0;
  for (const auto& simplex : triangulate_face(p, ids, n, base_vertex)) {
    std::vector<Covector> edges;
    for (std::size_t i = 1; i < simplex.size(); ++i) edges.push_back(verts[simplex[i]].point - verts[simplex[0]].point);
    total += abs(omega_h(p.reeb(), edges));
  }
  return total / factorial(static_cast<unsigned>(n));
}

namespace {

struct LawrenceTerm {
  Rational delta;
  Vector gamma;
};

LawrenceTerm expand_direction(const HPolytope& p, const PolytopeVertex& vertex, const Vector& u) {
  std::vector<Vector> cols{p.reeb()};
  for (auto i : vertex.active) cols.push_back(p.normals()[i]);
  const Matrix m = Matrix::from_columns(std::span<const Vector>(cols));
  return {det(m), solve_linear(m, u)};
}

std::optional<std::string> edge_constant(const HPolytope& p, const LinearFunctional& f) {
  for (const auto& vertex : p.vertices()) {
    const auto term = expand_direction(p, vertex, f.u);
    for (std::size_t i = 1; i < term.gamma.size(); ++i)
      if (term.gamma[i] == 0) return "f is constant along an edge at vertex " + to_string(vertex.point);
  }
  for (const auto& [i, j] : p.edges())
    if (f(p.vertices()[i].point) == f(p.vertices()[j].point))
      return "f takes equal values on adjacent vertices " + to_string(p.vertices()[i].point) + " and " +
             to_string(p.vertices()[j].point);
  return std::nullopt;
}

}  // namespace

Rational lawrence_volume(const HPolytope& p, const LinearFunctional& f) {
  require_simple(p);
  if (f.u.size() != p.ambient_dim()) fail(ErrorKind::DimensionMismatch, "functional has the wrong dimension");
  if (auto why = edge_constant(p, f)) fail(ErrorKind::EdgeConstantFunctional, *why);
  const long n = static_cast<long>(p.n());
  Rational total = 0;
  for (const auto& vertex : p.vertices()) {
    const auto term = expand_direction(p, vertex, f.u);
    // |delta| is delta for the ordering with det(b, v_1^L, ..., v_n^L) > 0.
    Rational denom = abs(term.delta);
    for (std::size_t i = 1; i < term.gamma.size(); ++i) denom *= term.gamma[i];
    total += power(f(vertex.point), n) / denom;
  }
  return total / factorial(static_cast<unsigned>(n));
}

LinearFunctional sample_functional(const HPolytope& p, RationalSampler& sampler) {
  require_simple(p);
  for (std::size_t attempt = 0; attempt < 100; ++attempt) {
    LinearFunctional f{sampler.vector(p.ambient_dim()), sampler.small_rational()};
    if (!edge_constant(p, f)) return f;
  }
  fail(ErrorKind::EdgeConstantFunctional, "no functional nonconstant on every edge found in 100 draws");
}

MsyCheck msy_check(const GoodCone& cone, std::uint64_t seed) {
  RationalSampler sampler(seed);
  MsyCheck out;
  for (std::size_t attempt = 0;; ++attempt) {
    if (attempt == 100) fail(ErrorKind::AllSamplesPoles, "no pole-free v found for the toric volume");
    out.v = sampler.vector(cone.dim());
    try {
      out.lhs = toric_volume(cone, out.v);
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleAtSample) throw;
    }
  }
  const HPolytope polytope = HPolytope::from_cone(cone);
  out.f = sample_functional(polytope, sampler);
  const Rational volume = lawrence_volume(polytope, out.f);
  // Omega_H is normalized on e_i = (lattice basis)/(2pi), i.e. (2pi)^{s-1} times
  // the lattice coordinates used here.
  const long s = cone.pi_scale_exponent();
  const long dims = static_cast<long>(cone.dim());
  out.rhs = PiScalar(power(Rational(2), 1 + (s - 1) * dims) * volume, s * dims);
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace abbvloc
