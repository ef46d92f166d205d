#include "abbvloc/io.hpp"

#include <fstream>

#include "abbvloc/error.hpp"

namespace abbvloc::io {
namespace {

[[noreturn]] void schema(const std::string& what) { fail(ErrorKind::InvalidInput, "schema violation: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema("expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t positive_size(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) schema(std::string("\"") + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

template <class Tag>
Coords<Tag> coords_from_json(const Json& j, std::size_t dim, const std::string& what) {
  auto xs = rationals_from_json(j);
  if (xs.size() != dim) schema(what + " must have " + std::to_string(dim) + " entries");
  return Coords<Tag>(std::move(xs));
}

template <class Tag>
Json coords_to_json(const Coords<Tag>& x) {
  return to_json(x.entries());
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array() || j.size() != rows) schema(what + " must have " + std::to_string(rows) + " rows");
  std::vector<std::vector<Rational>> data;
  for (const auto& row : j) {
    auto xs = rationals_from_json(row);
    if (xs.size() != cols) schema(what + " rows must have " + std::to_string(cols) + " entries");
    data.push_back(std::move(xs));
  }
  return Matrix::from_rows(data);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  schema("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const Rational& q) { return to_string(q); }

PiScalar pi_scalar_from_json(const Json& j) {
  const Json& power = field(j, "pi_power");
  if (!power.is_number_integer()) schema("\"pi_power\" must be an integer");
  return PiScalar(rational_from_json(field(j, "coeff")), power.get<long>());
}

Json to_json(const PiScalar& x) {
  Json j = Json::object();
  j["coeff"] = to_json(x.coeff());
  j["pi_power"] = x.pi_power();
  return j;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) schema("expected an array of rationals, got " + j.dump());
  std::vector<Rational> xs;
  for (const auto& e : j) xs.push_back(rational_from_json(e));
  return xs;
}

Json to_json(const std::vector<Rational>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

OrbitSystem orbit_system_from_json(const Json& j) {
  const std::size_t dim = positive_size(j, "dim_t");
  const std::size_t n = positive_size(j, "codim_half");
  Vector b = coords_from_json<PrimalTag>(field(j, "b"), dim, "\"b\"");
  const Json& orbits_json = field(j, "orbits");
  if (!orbits_json.is_array()) schema("\"orbits\" must be an array");
  std::vector<OrbitDatum> orbits;
  for (const auto& o : orbits_json) {
    OrbitDatum datum;
    datum.length = pi_scalar_from_json(field(o, "length"));
    datum.moment = coords_from_json<DualTag>(field(o, "moment"), dim, "\"moment\"");
    const Json& weights = field(o, "weights");
    if (!weights.is_array()) schema("\"weights\" must be an array");
    for (const auto& w : weights) datum.weights.push_back(coords_from_json<DualTag>(w, dim, "weight"));
    orbits.push_back(std::move(datum));
  }
  PiScalar scale(1);
  if (j.contains("weight_scale")) scale = pi_scalar_from_json(j["weight_scale"]);
  return OrbitSystem(dim, std::move(b), n, std::move(orbits), std::move(scale));
}

Json to_json(const OrbitSystem& sys) {
  Json j = Json::object();
  j["dim_t"] = sys.dim_t();
  j["b"] = coords_to_json(sys.b());
  j["codim_half"] = sys.codim_half();
  Json orbits = Json::array();
  for (const auto& o : sys.orbits()) {
    Json oj = Json::object();
    oj["length"] = to_json(o.length);
    oj["moment"] = coords_to_json(o.moment);
    Json weights = Json::array();
    for (const auto& w : o.weights) weights.push_back(coords_to_json(w));
    oj["weights"] = std::move(weights);
    orbits.push_back(std::move(oj));
  }
  j["orbits"] = std::move(orbits);
  if (!(sys.weight_scale() == PiScalar(1))) j["weight_scale"] = to_json(sys.weight_scale());
  return j;
}

GoodCone cone_from_json(const Json& j) {
  const std::size_t dim = positive_size(j, "dim");
  Matrix basis = matrix_from_json(field(j, "lattice_basis"), dim, dim, "\"lattice_basis\"");
  const Json& scale = field(j, "pi_scale_exponent");
  if (!scale.is_number_integer()) schema("\"pi_scale_exponent\" must be an integer");
  const Json& normals_json = field(j, "normals");
  if (!normals_json.is_array()) schema("\"normals\" must be an array");
  std::vector<Vector> normals;
  for (const auto& v : normals_json) {
    for (const auto& e : v)
      if (!e.is_number_integer()) schema("normals must have integer entries");
    normals.push_back(coords_from_json<PrimalTag>(v, dim, "normal"));
  }
  Vector reeb = coords_from_json<PrimalTag>(field(j, "reeb"), dim, "\"reeb\"");
  return GoodCone(dim, std::move(basis), scale.get<int>(), std::move(normals), std::move(reeb));
}

Json to_json(const GoodCone& cone) {
  Json j = Json::object();
  j["dim"] = cone.dim();
  j["lattice_basis"] = matrix_to_json(cone.lattice_basis());
  j["pi_scale_exponent"] = cone.pi_scale_exponent();
  Json normals = Json::array();
  for (const auto& v : cone.normals()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(Json::parse(x.get_num().get_str()));
    normals.push_back(std::move(row));
  }
  j["normals"] = std::move(normals);
  j["reeb"] = coords_to_json(cone.reeb());
  return j;
}

RootData root_data_from_json(const Json& j) {
  const std::size_t dim = positive_size(j, "dim_t");
  std::vector<Covector> roots;
  const Json& roots_json = field(j, "roots");
  if (!roots_json.is_array()) schema("\"roots\" must be an array");
  for (const auto& r : roots_json) roots.push_back(coords_from_json<DualTag>(r, dim, "root"));
  std::vector<Matrix> reps;
  const Json& reps_json = field(j, "weyl_reps");
  if (!reps_json.is_array()) schema("\"weyl_reps\" must be an array");
  for (const auto& w : reps_json) reps.push_back(matrix_from_json(w, dim, dim, "Weyl representative"));
  Vector b = coords_from_json<PrimalTag>(field(j, "b"), dim, "\"b\"");
  Covector p = coords_from_json<DualTag>(field(j, "p"), dim, "\"p\"");
  PiScalar length(1);
  if (j.contains("orbit_length")) length = pi_scalar_from_json(j["orbit_length"]);
  return RootData(dim, std::move(roots), std::move(reps), std::move(b), std::move(p), std::move(length));
}

Json to_json(const RootData& rd) {
  Json j = Json::object();
  j["dim_t"] = rd.dim_t();
  Json roots = Json::array();
  for (const auto& r : rd.roots()) roots.push_back(coords_to_json(r));
  j["roots"] = std::move(roots);
  Json reps = Json::array();
  for (const auto& w : rd.weyl_reps()) reps.push_back(matrix_to_json(w));
  j["weyl_reps"] = std::move(reps);
  j["b"] = coords_to_json(rd.b());
  j["p"] = coords_to_json(rd.p());
  j["orbit_length"] = to_json(rd.orbit_length());
  return j;
}

HPolytope polytope_from_json(const Json& j) {
  const std::size_t dim = positive_size(j, "dim");
  const Json& normals_json = field(j, "normals");
  if (!normals_json.is_array()) schema("\"normals\" must be an array");
  std::vector<Vector> normals;
  for (const auto& v : normals_json) normals.push_back(coords_from_json<PrimalTag>(v, dim, "normal"));
  Vector reeb = coords_from_json<PrimalTag>(field(j, "reeb"), dim, "\"reeb\"");
  return HPolytope::from_h_representation(std::move(normals), std::move(reeb));
}

bool is_cone_document(const Json& j) { return j.is_object() && j.contains("lattice_basis"); }

Json parse_json(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path.string());
  return parse_json(in);
}

}  // namespace abbvloc::io
