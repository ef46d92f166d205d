#pragma once

#include <filesystem>
#include <istream>

#include <json.hpp>

#include "abbvloc/homogeneous.hpp"
#include "abbvloc/orbit_system.hpp"
#include "abbvloc/polytope.hpp"
#include "abbvloc/toric.hpp"

namespace abbvloc::io {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings "p/q"; bare JSON integers are accepted on input.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);

/// {"coeff": "p/q", "pi_power": e}
PiScalar pi_scalar_from_json(const Json& j);
Json to_json(const PiScalar& x);

std::vector<Rational> rationals_from_json(const Json& j);
Json to_json(const std::vector<Rational>& xs);

/// {"dim_t", "b", "codim_half", "orbits": [{"length", "moment", "weights"}],
///  optional "weight_scale"}
OrbitSystem orbit_system_from_json(const Json& j);
Json to_json(const OrbitSystem& sys);

/// {"dim", "lattice_basis", "pi_scale_exponent", "normals", "reeb"}
GoodCone cone_from_json(const Json& j);
Json to_json(const GoodCone& cone);

/// {"dim_t", "roots", "weyl_reps", "b", "p", optional "orbit_length"}
RootData root_data_from_json(const Json& j);
Json to_json(const RootData& rd);

/// {"dim", "normals", "reeb"}, vertices recovered from the H-representation.
HPolytope polytope_from_json(const Json& j);

/// True when the document looks like a cone (has "lattice_basis").
bool is_cone_document(const Json& j);

Json parse_json(std::istream& in);
Json load_json_file(const std::filesystem::path& path);

}  // namespace abbvloc::io
