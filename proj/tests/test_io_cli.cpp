#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "abbvloc/cli.hpp"
#include "abbvloc/homogeneous.hpp"
#include "abbvloc/io.hpp"
#include "abbvloc/orbit_system.hpp"
#include "abbvloc/toric.hpp"

using namespace abbvloc;
using io::Json;

namespace {

const std::string kFixtures = ABBVLOC_FIXTURE_DIR;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

cli::Outcome run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  return cli::run_command_line(args, in);
}

Json run_json(std::vector<std::string> args, int expected_exit = 0) {
  args.push_back("--json");
  const auto outcome = run(args);
  CHECK(outcome.exit_code == expected_exit);
  return Json::parse(outcome.out);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an abbvloc::Error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("orbit system JSON round trip") {
  const OrbitSystem from_file = io::orbit_system_from_json(io::load_json_file(fixture("sphere_1_2.json")));
  CHECK(io::to_json(from_file) == io::to_json(weighted_sphere_system({1, 2})));
  const OrbitSystem scaled(2, from_file.b(), 1, from_file.orbits(), PiScalar::two_pi());
  const OrbitSystem back = io::orbit_system_from_json(io::to_json(scaled));
  CHECK(back.weight_scale() == PiScalar::two_pi());
  CHECK(io::to_json(back) == io::to_json(scaled));
}

TEST_CASE("cone and root data JSON round trip") {
  const GoodCone cone = io::cone_from_json(io::load_json_file(fixture("conifold.json")));
  CHECK(io::to_json(cone) == io::to_json(fixtures::conifold_cone({3, Rational(3, 2), Rational(3, 2)})));
  CHECK(io::to_json(io::cone_from_json(io::to_json(cone))) == io::to_json(cone));
  const RootData rd = io::root_data_from_json(io::load_json_file(fixture("stiefel_so5_so3.json")));
  CHECK(io::to_json(rd) == io::to_json(fixtures::stiefel_so5_so3()));
}

TEST_CASE("rationals and pi scalars in JSON") {
  CHECK(io::rational_from_json(Json("-3/9")) == Rational(-1, 3));
  CHECK(io::rational_from_json(Json(12)) == 12);
  CHECK(io::to_json(parse_rational("5/10")) == Json("1/2"));
  CHECK(io::pi_scalar_from_json(Json::parse(R"({"coeff": "2/3", "pi_power": 4})")) == PiScalar(Rational(2, 3), 4));
  CHECK(kind_of([] { io::rational_from_json(Json(1.5)); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::rational_from_json(Json("1/x")); }) == ErrorKind::InvalidInput);
}

TEST_CASE("schema violations are input errors") {
  Json doc = io::load_json_file(fixture("sphere_1_2.json"));
  doc.erase("codim_half");
  CHECK(kind_of([&] { io::orbit_system_from_json(doc); }) == ErrorKind::InvalidInput);
  doc = io::load_json_file(fixture("sphere_1_2.json"));
  doc["orbits"][0]["moment"] = Json::array({"1"});
  CHECK(kind_of([&] { io::orbit_system_from_json(doc); }) == ErrorKind::InvalidInput);
  Json cone = io::load_json_file(fixture("conifold.json"));
  cone["normals"][0] = Json::array({"-1", "0", "0"});
  CHECK(kind_of([&] { io::cone_from_json(cone); }) == ErrorKind::InvalidInput);
  cone = io::load_json_file(fixture("conifold.json"));
  cone["lattice_basis"][1] = Json::array({"0", "1"});
  CHECK(kind_of([&] { io::cone_from_json(cone); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { io::load_json_file(fixture("does_not_exist.json")); }) == ErrorKind::InvalidInput);
  std::istringstream broken("{\"dim\": ");
  CHECK(kind_of([&] { io::parse_json(broken); }) == ErrorKind::InvalidInput);
}

TEST_CASE("cli: weighted sphere example") {
  const auto outcome = run({"volume-sphere", "--weights", "1,2"});
  CHECK(outcome.exit_code == 0);
  CHECK(outcome.out.find("exact     1 * pi^2\n") != std::string::npos);
  CHECK(outcome.out.find("9.86960440109 (advisory)") != std::string::npos);
  const Json j = run_json({"volume-sphere", "--weights", "1,2"});
  CHECK(j["exact"] == "1 * pi^2");
  CHECK(j["value"]["pi_power"] == 2);
  CHECK(j["decimal"]["advisory"] == true);
  CHECK(j["status"] == "ok");
}

TEST_CASE("cli: Stiefel example") {
  const Json j = run_json({"stiefel", "--w", "0,0,1"});
  CHECK(j["exact"] == "2/3 * pi^4");
  for (const auto& c : j["checks"]) CHECK(c["pass"] == true);
  CHECK(run_json({"stiefel", "--w", "1,1/2,3"})["exact"] ==
        run_json({"homogeneous", "--input", fixture("stiefel_so5_so3.json"), "--reeb", "1,1/2,3"})["exact"]);
}

TEST_CASE("cli: symmetric identity report") {
  const Json j = run_json({"check-w1", "--m", "3", "--trials", "50", "--seed", "7"});
  CHECK(j["status"] == "ok");
  CHECK(j["checks"].size() == 3);
  for (const auto& c : j["checks"]) {
    CHECK(c["pass"] == true);
    CHECK(c["detail"] == "50/50 trials");
  }
}

TEST_CASE("cli: output is deterministic and the seed only moves samples") {
  const std::vector<std::string> args{"volume-toric", "--input", fixture("conifold.json"), "--json"};
  CHECK(run(args).out == run(args).out);
  auto seeded = args;
  seeded.insert(seeded.end(), {"--seed", "5"});
  const Json a = Json::parse(run(args).out), b = Json::parse(run(seeded).out);
  CHECK(a["exact"] == "16/27 * pi^3");
  CHECK(b["exact"] == a["exact"]);
  CHECK(b["v"] != a["v"]);
}

TEST_CASE("cli: seed from the environment") {
  const std::vector<std::string> args{"volume-sphere", "--weights", "1,2,3", "--json"};
  auto explicit_seed = args;
  explicit_seed.insert(explicit_seed.end(), {"--seed", "9"});
  const std::string with_seed_9 = run(explicit_seed).out;
  const std::string with_default = run(args).out;
  setenv("ABBVLOC_SEED", "9", 1);
  const std::string from_env = run(args).out;
  auto overridden = args;
  overridden.insert(overridden.end(), {"--seed", "42"});
  const std::string env_overridden = run(overridden).out;
  setenv("ABBVLOC_SEED", "nine", 1);
  const auto bad = run(args);
  unsetenv("ABBVLOC_SEED");
  CHECK(from_env == with_seed_9);
  CHECK(env_overridden == with_default);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: orbit system input from a file and from stdin") {
  CHECK(run_json({"localize", "--input", fixture("sphere_1_2.json")})["exact"] == "1 * pi^2");
  std::ifstream file(fixture("sphere_1_2.json"));
  std::stringstream text;
  text << file.rdbuf();
  const auto outcome = run({"localize", "--json"}, text.str());
  CHECK(outcome.exit_code == 0);
  CHECK(Json::parse(outcome.out)["exact"] == "1 * pi^2");
  CHECK(run({"localize", "--input", "-", "--json"}, text.str()).out == outcome.out);
}

TEST_CASE("cli: corrupted orbit data is a check failure") {
  const Json j = run_json({"check-v-independence", "--input", fixture("single_orbit.json")}, 1);
  CHECK(j["status"] == "check failure");
  CHECK(j["checks"][0]["pass"] == false);
  CHECK_FALSE(j.contains("exact"));
  CHECK(run_json({"check-v-independence", "--input", fixture("sphere_1_2.json")})["exact"] == "1 * pi^2");
}

TEST_CASE("cli: polytopes") {
  CHECK(run_json({"lawrence", "--input", fixture("square.json")})["exact"] == "1 * pi^0");
  CHECK(run_json({"polytope-volume", "--input", fixture("octahedron.json")})["exact"] == "4/3 * pi^0");
  const Json err = run_json({"lawrence", "--input", fixture("octahedron.json")}, 2);
  CHECK(err["error"]["kind"] == "NotSimpleVertex");
  CHECK(run_json({"lawrence", "--fixture", "simplex", "--reeb", "1,1,1"})["exact"] == "1/2 * pi^0");
  const Json msy = run_json({"msy-check", "--input", fixture("conifold.json")});
  CHECK(msy["toric_volume"] == msy["polytope_side"]);
}

TEST_CASE("cli: goodness violations exit with an error object") {
  const Json j = run_json({"volume-toric", "--input", fixture("divisor_two.json")}, 2);
  CHECK(j["error"]["kind"] == "GoodnessViolation");
  CHECK(j["error"]["message"].is_string());
}

TEST_CASE("cli: secondary numbers and DH coefficients") {
  CHECK(run_json({"secondary", "--weights", "1,2", "--J", "1"})["exact"] == "9/2 * pi^0");
  const Json all = run_json({"secondary", "--weights", "1,2,4"});
  CHECK(all["numbers"].size() == 2);
  const Json dh = run_json({"dh", "--fixture", "sphere-pattern", "--weights", "1,1,1", "--order", "5"});
  CHECK(dh["coefficients"].size() == 6);
  CHECK(dh["coefficients"][0] == "0 * pi^0");
}

TEST_CASE("cli: usage errors") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"volume-sphere"}).exit_code == 2);
  CHECK(run({"volume-sphere", "--weights", "1,1"}).exit_code == 2);
  CHECK(run({"volume-sphere", "--weights", "1,2", "--bogus"}).exit_code == 2);
  CHECK(run({"volume-sphere", "--weights", "1,2", "--samples", "1"}).exit_code == 2);
  CHECK(run({"localize", "--input", fixture("missing.json")}).exit_code == 2);
  CHECK(run({"localize"}, "not json").exit_code == 2);
  CHECK(run({"volume-toric", "--fixture", "nonsense"}).exit_code == 2);
  const auto help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("volume-sphere") != std::string::npos);
  const auto err = run({"volume-sphere", "--weights", "1,x"});
  CHECK(Json::parse(err.out)["error"]["kind"] == "InvalidInput");
}
