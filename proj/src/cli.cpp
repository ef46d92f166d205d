#include "abbvloc/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "abbvloc/error.hpp"
#include "abbvloc/homogeneous.hpp"
#include "abbvloc/localization.hpp"
#include "abbvloc/polytope.hpp"
#include "abbvloc/secondary.hpp"
#include "abbvloc/toric.hpp"

namespace abbvloc::cli {
namespace {

using io::Json;

std::vector<Rational> parse_list(const std::string& text, const std::string& option) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) fail(ErrorKind::InvalidInput, option + " needs a comma-separated list of rationals");
  return out;
}

Vector parse_vector(const std::string& text, std::size_t dim, const std::string& option) {
  auto xs = parse_list(text, option);
  if (xs.size() != dim)
    fail(ErrorKind::InvalidInput, option + " must have " + std::to_string(dim) + " entries, got " +
                                      std::to_string(xs.size()));
  return Vector(std::move(xs));
}

const std::string& need(const std::optional<std::string>& value, const std::string& option) {
  if (!value) fail(ErrorKind::InvalidInput, "missing required option " + option);
  return *value;
}

template <class Tag>
std::string render(const Coords<Tag>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += to_string(x[i]);
  }
  return s + ")";
}

Json render_functional(const LinearFunctional& f) {
  Json j = Json::object();
  j["u"] = render(f.u);
  j["shift"] = to_string(f.shift);
  return j;
}

// ---- input loading ----

Json read_document(const JobSpec& job, std::istream& in) {
  if (!job.input_path || *job.input_path == "-") return io::parse_json(in);
  return io::load_json_file(*job.input_path);
}

[[noreturn]] void unknown_fixture(const std::string& name, const std::string& known) {
  fail(ErrorKind::InvalidInput, "unknown fixture \"" + name + "\" (known: " + known + ")");
}

OrbitSystem load_orbit_system(const JobSpec& job, std::istream& in) {
  if (job.fixture) {
    const auto w = parse_list(need(job.weights, "--weights"), "--weights");
    if (*job.fixture == "sphere") return weighted_sphere_system(w);
    if (*job.fixture == "sphere-pattern") return sphere_weight_pattern(w);
    unknown_fixture(*job.fixture, "sphere, sphere-pattern");
  }
  return io::orbit_system_from_json(read_document(job, in));
}

GoodCone load_cone(const JobSpec& job, std::istream& in) {
  if (job.fixture) {
    if (*job.fixture == "sphere")
      return fixtures::weighted_sphere_cone(parse_list(need(job.weights, "--weights"), "--weights"));
    if (*job.fixture == "simplex") return fixtures::simplex_cone(parse_list(need(job.reeb, "--reeb"), "--reeb"));
    if (*job.fixture == "conifold")
      return fixtures::conifold_cone(parse_list(need(job.reeb, "--reeb"), "--reeb"));
    unknown_fixture(*job.fixture, "sphere, simplex, conifold");
  }
  return io::cone_from_json(read_document(job, in));
}

HPolytope load_polytope(const JobSpec& job, std::istream& in) {
  if (job.fixture) return HPolytope::from_cone(load_cone(job, in));
  const Json doc = read_document(job, in);
  if (io::is_cone_document(doc)) return HPolytope::from_cone(io::cone_from_json(doc));
  return io::polytope_from_json(doc);
}

RootData load_root_data(const JobSpec& job, std::istream& in) {
  if (job.fixture) {
    if (*job.fixture == "stiefel-so5-so3") return fixtures::stiefel_so5_so3();
    unknown_fixture(*job.fixture, "stiefel-so5-so3");
  }
  return io::root_data_from_json(read_document(job, in));
}

// ---- sampling ----

struct Sampled {
  PiScalar value;
  Vector v;
};

/// Runs the v-independence check for `quantity`, records it, and returns the
/// value at --v when given, else at the first pole-free sample.
Sampled evaluate_sampled(const JobSpec& job, std::size_t dim, const SampledQuantity& quantity, ResultReport& report,
                         const std::string& check_name = "v-independence") {
  Check check{check_name, false, ""};
  Sampled result;
  try {
    const SampleOutcome outcome = check_v_independence(dim, quantity, job.samples, job.seed);
    check.pass = true;
    check.detail = std::to_string(outcome.samples_used.size()) + " pole-free samples agree";
    if (outcome.rejected_poles) check.detail += ", " + std::to_string(outcome.rejected_poles) + " pole draws skipped";
    result = {outcome.value, outcome.samples_used.front()};
  } catch (const InconsistentSamplesError& e) {
    check.detail = "v = " + render(e.first_sample()) + " gives " + e.first_value().to_string() + " but v = " +
                   render(e.second_sample()) + " gives " + e.second_value().to_string();
    result = {e.first_value(), e.first_sample()};
  }
  report.checks.push_back(std::move(check));
  if (job.v) {
    result.v = parse_vector(*job.v, dim, "--v");
    result.value = quantity(result.v);
  }
  return result;
}

Check equality_check(std::string name, const PiScalar& got, const PiScalar& expected, const std::string& label) {
  Check c{std::move(name), got == expected, label + " = " + expected.to_string()};
  if (!c.pass) c.detail += ", got " + got.to_string();
  return c;
}

// ---- commands ----

using Command = std::function<void(const JobSpec&, std::istream&, ResultReport&)>;

void volume_sphere(const JobSpec& job, std::istream&, ResultReport& report) {
  const auto w = parse_list(need(job.weights, "--weights"), "--weights");
  const OrbitSystem sys = weighted_sphere_system(w);
  const auto s = evaluate_sampled(
      job, sys.dim_t(), [&](const Vector& v) { return localize_volume(sys, v); }, report);
  report.exact = s.value;
  report.fields["n"] = sys.codim_half();
  report.fields["v"] = render(s.v);
  report.checks.push_back(
      equality_check("closed-form", s.value, weighted_sphere_volume_closed_form(w), "2 pi^(n+1) / (n! prod w)"));
}

void volume_toric(const JobSpec& job, std::istream& in, ResultReport& report) {
  const GoodCone cone = load_cone(job, in);
  const auto orbits = enumerate_vertices(cone);
  const OrbitSystem sys = orbit_system_from_cone(cone);
  const auto s = evaluate_sampled(
      job, cone.dim(), [&](const Vector& v) { return toric_volume(cone, v); }, report);
  report.exact = s.value;
  report.fields["n"] = cone.n();
  report.fields["v"] = render(s.v);
  Json vertices = Json::array();
  for (const auto& o : orbits) vertices.push_back(render(o.vertex));
  report.fields["vertices"] = std::move(vertices);
  report.checks.push_back(equality_check("localization-route", s.value, localize_volume(sys, s.v),
                                         "localization over closed Reeb orbits"));
  if (job.fixture && *job.fixture == "sphere")
    report.checks.push_back(equality_check(
        "closed-form", s.value,
        weighted_sphere_volume_closed_form(parse_list(*job.weights, "--weights")), "2 pi^(n+1) / (n! prod w)"));
}

void lawrence(const JobSpec& job, std::istream& in, ResultReport& report) {
  const HPolytope p = load_polytope(job, in);
  RationalSampler sampler(job.seed);
  const LinearFunctional f = sample_functional(p, sampler);
  const Rational volume = lawrence_volume(p, f);
  report.exact = PiScalar(volume);
  report.fields["n"] = p.n();
  report.fields["vertices"] = p.vertices().size();
  report.fields["functional"] = render_functional(f);
  const Rational tri = triangulation_volume(p);
  report.checks.push_back(equality_check("triangulation", PiScalar(volume), PiScalar(tri), "fan triangulation"));
  Check independence{"functional-independence", true, ""};
  std::size_t tried = 0;
  for (; tried + 1 < job.samples && independence.pass; ++tried) {
    const LinearFunctional g = sample_functional(p, sampler);
    const Rational other = lawrence_volume(p, g);
    if (other != volume) {
      independence.pass = false;
      independence.detail = "functional u = " + render(g.u) + " gives " + to_string(other);
    }
  }
  if (independence.pass) independence.detail = std::to_string(tried + 1) + " functionals agree";
  report.checks.push_back(std::move(independence));
}

void polytope_volume(const JobSpec& job, std::istream& in, ResultReport& report) {
  const HPolytope p = load_polytope(job, in);
  const Rational volume = triangulation_volume(p);
  report.exact = PiScalar(volume);
  report.fields["n"] = p.n();
  report.fields["vertices"] = p.vertices().size();
  report.fields["simple"] = p.is_simple();
  Check bases{"base-vertex-independence", true, ""};
  for (std::size_t i = 1; i < p.vertices().size() && bases.pass; ++i) {
    const Rational other = triangulation_volume(p, i);
    if (other != volume) {
      bases.pass = false;
      bases.detail = "base vertex " + render(p.vertices()[i].point) + " gives " + to_string(other);
    }
  }
  if (bases.pass) bases.detail = std::to_string(p.vertices().size()) + " base vertices agree";
  report.checks.push_back(std::move(bases));
  if (p.is_simple()) {
    RationalSampler sampler(job.seed);
    const LinearFunctional f = sample_functional(p, sampler);
    report.fields["functional"] = render_functional(f);
    report.checks.push_back(
        equality_check("lawrence", PiScalar(volume), PiScalar(lawrence_volume(p, f)), "Lawrence vertex sum"));
  }
}

void msy(const JobSpec& job, std::istream& in, ResultReport& report) {
  const GoodCone cone = load_cone(job, in);
  const MsyCheck m = msy_check(cone, job.seed);
  report.exact = m.lhs;
  report.fields["n"] = cone.n();
  report.fields["v"] = render(m.v);
  report.fields["functional"] = render_functional(m.f);
  report.fields["toric_volume"] = m.lhs.to_string();
  report.fields["polytope_side"] = m.rhs.to_string();
  report.checks.push_back(equality_check("msy-bridge", m.lhs, m.rhs, "2 pi^(n+1) Vol_H"));
}

void localize(const JobSpec& job, std::istream& in, ResultReport& report) {
  const OrbitSystem sys = load_orbit_system(job, in);
  const auto s = evaluate_sampled(
      job, sys.dim_t(), [&](const Vector& v) { return localize_volume(sys, v); }, report);
  report.exact = s.value;
  report.fields["n"] = sys.codim_half();
  report.fields["orbits"] = sys.orbits().size();
  report.fields["v"] = render(s.v);
}

void dh(const JobSpec& job, std::istream& in, ResultReport& report) {
  const OrbitSystem sys = load_orbit_system(job, in);
  const std::size_t n = sys.codim_half();
  const auto s = evaluate_sampled(
      job, sys.dim_t(), [&](const Vector& v) { return dh_series(sys, v, n)[n]; }, report,
      "v-independence of c_n");
  const auto series = dh_series(sys, s.v, job.order);
  report.fields["n"] = n;
  report.fields["v"] = render(s.v);
  Json coefficients = Json::array();
  for (const auto& c : series) coefficients.push_back(c.to_string());
  report.fields["coefficients"] = std::move(coefficients);
  Check vanishing{"low-order-vanishing", true, "c_s = 0 for s < n"};
  for (std::size_t k = 0; k < std::min(n, series.size()); ++k)
    if (!series[k].is_zero()) {
      vanishing.pass = false;
      vanishing.detail = "c_" + std::to_string(k) + " = " + series[k].to_string();
      break;
    }
  report.checks.push_back(std::move(vanishing));
}

std::array<Rational, 3> as_array3(const Vector& v) { return {v[0], v[1], v[2]}; }

void stiefel(const JobSpec& job, std::istream&, ResultReport& report) {
  const RootData rd = fixtures::stiefel_so5_so3();
  const Vector w = parse_vector(need(job.weights, "--w"), 3, "--w");
  const auto s = evaluate_sampled(
      job, 3, [&](const Vector& v) { return homogeneous_volume(rd, w, v); }, report);
  report.exact = s.value;
  report.fields["v"] = render(s.v);
  report.checks.push_back(
      equality_check("four-sum", s.value, stiefel_four_sum(as_array3(w), as_array3(s.v)), "four localized summands"));
  report.checks.push_back(equality_check("closed-form", s.value, stiefel_closed_form(as_array3(w)),
                                         "2 pi^4 / (3 (z^2 - y^2)(z^2 - x^2))"));
}

void homogeneous(const JobSpec& job, std::istream& in, ResultReport& report) {
  const RootData rd = load_root_data(job, in);
  const Vector b = job.reeb ? parse_vector(*job.reeb, rd.dim_t(), "--reeb") : rd.b();
  const auto s = evaluate_sampled(
      job, rd.dim_t(), [&](const Vector& v) { return homogeneous_volume(rd, b, v); }, report);
  report.exact = s.value;
  report.fields["reeb"] = render(b);
  report.fields["v"] = render(s.v);
}

void check_w1(const JobSpec& job, std::istream&, ResultReport& report) {
  if (job.m < 1) fail(ErrorKind::InvalidInput, "--m must be at least 1");
  RationalSampler sampler(job.seed);
  const auto multiindices = multiindices_of_weight(job.m);
  report.fields["m"] = job.m;
  report.fields["trials"] = job.trials;
  report.fields["multiindices"] = multiindices.size();
  for (const auto& J : multiindices) {
    Check check{"identity J = " + J.to_string(), true, ""};
    std::size_t passed = 0;
    for (std::size_t t = 0; t < job.trials; ++t) {
      const auto w = sampler.distinct_positive(static_cast<std::size_t>(job.m) + 1);
      const W1Sides sides = w1_identity_sides(J, w);
      if (sides.lhs == sides.rhs) {
        ++passed;
      } else if (check.pass) {
        check.pass = false;
        check.detail = "w = " + render(Vector(w)) + ": " + to_string(sides.lhs) + " != " + to_string(sides.rhs) + "; ";
      }
    }
    check.detail += std::to_string(passed) + "/" + std::to_string(job.trials) + " trials";
    report.checks.push_back(std::move(check));
  }
}

void secondary(const JobSpec& job, std::istream&, ResultReport& report) {
  const WeightedSphereFoliation f(parse_list(need(job.weights, "--weights"), "--weights"));
  std::vector<Multiindex> multiindices;
  if (job.J) {
    multiindices.push_back(Multiindex::parse(*job.J));
  } else {
    multiindices = multiindices_of_weight(f.m());
  }
  report.fields["m"] = f.m();
  Json leaves = Json::array();
  for (const auto& x : u1_leaf_integrals(f)) leaves.push_back(to_string(x));
  report.fields["u1_leaf_integrals"] = std::move(leaves);
  Json numbers = Json::object();
  for (const auto& J : multiindices) {
    const auto s = evaluate_sampled(
        job, f.w().size(), [&](const Vector& v) { return PiScalar(asuke_number(f, J, v)); }, report,
        "v-independence J = " + J.to_string());
    numbers[J.to_string()] = s.value.to_string();
    report.checks.push_back(equality_check("closed-form J = " + J.to_string(), s.value,
                                           PiScalar(asuke_closed_form(f, J)), "s_1 s_J / s_(m+1)"));
    if (multiindices.size() == 1) report.exact = s.value;
  }
  report.fields["numbers"] = std::move(numbers);
}

void check_v(const JobSpec& job, std::istream& in, ResultReport& report) {
  const OrbitSystem sys = load_orbit_system(job, in);
  const auto s = evaluate_sampled(
      job, sys.dim_t(), [&](const Vector& v) { return localize_volume(sys, v); }, report);
  report.fields["samples"] = job.samples;
  if (report.checks.back().pass) report.exact = s.value;
}

struct CommandInfo {
  const char* name;
  const char* description;
  Command run;
  // option groups
  bool input;
  bool sampling;
};

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> table = {
      {"volume-sphere", "Volume of the deformed sphere with Reeb weights --weights", volume_sphere, false, true},
      {"volume-toric", "Toric Sasakian volume of a cone", volume_toric, true, true},
      {"lawrence", "Vol_H of the characteristic polytope by Lawrence's formula", lawrence, true, true},
      {"polytope-volume", "Vol_H of the characteristic polytope by triangulation", polytope_volume, true, true},
      {"msy-check", "Toric volume against 2 pi^(n+1) Vol_H", msy, true, true},
      {"localize", "Localized volume of an orbit system", localize, true, true},
      {"dh", "Localized Duistermaat-Heckman coefficients c_0..c_order", dh, true, true},
      {"stiefel", "Volume of SO(5)/SO(3) deformed to Reeb element --w", stiefel, false, true},
      {"homogeneous", "Volume of a homogeneous Sasakian manifold from root data", homogeneous, true, true},
      {"check-w1", "Symmetric identity behind the weighted-sphere Asuke numbers", check_w1, false, true},
      {"secondary", "Asuke numbers u_1 s_J of the weighted-sphere Reeb foliation", secondary, false, true},
      {"check-v-independence", "Exact agreement of the localized volume across samples", check_v, true, true},
  };
  return table;
}

std::string error_object(std::string_view kind, const std::string& message) {
  Json j = Json::object();
  j["error"] = Json::object();
  j["error"]["kind"] = std::string(kind);
  j["error"]["message"] = message;
  return j.dump(2) + "\n";
}

}  // namespace

bool ResultReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

void render_field(std::ostream& out, const std::string& key, const Json& value) {
  constexpr std::size_t kWidth = 10;
  std::string label = key + " ";
  if (label.size() < kWidth) label.resize(kWidth, ' ');
  if (value.is_string()) {
    out << label << value.get<std::string>() << "\n";
  } else if (value.is_array()) {
    out << key << "\n";
    for (std::size_t i = 0; i < value.size(); ++i)
      out << "  [" << i << "] " << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump()) << "\n";
  } else if (value.is_object()) {
    out << key << "\n";
    for (const auto& [k, v] : value.items())
      out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  } else {
    out << label << value.dump() << "\n";
  }
}

}  // namespace

std::string ResultReport::render_text() const {
  std::ostringstream out;
  render_field(out, "command", command);
  if (exact) {
    render_field(out, "exact", exact->to_string());
    render_field(out, "decimal", exact->to_decimal(12) + " (advisory)");
  }
  for (const auto& [key, value] : fields.items()) render_field(out, key, value);
  if (!checks.empty()) {
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    out << "checks\n";
    for (const auto& c : checks) {
      std::string name = c.name;
      name.resize(width, ' ');
      out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << name << "  " << c.detail << "\n";
    }
  }
  render_field(out, "result", all_pass() ? "ok" : "check failure");
  return out.str();
}

Json ResultReport::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  if (exact) {
    j["exact"] = exact->to_string();
    j["value"] = io::to_json(*exact);
    j["decimal"] = {{"value", exact->to_decimal(12)}, {"advisory", true}};
  }
  for (const auto& [key, value] : fields.items()) j[key] = value;
  Json cs = Json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(cs);
  j["status"] = all_pass() ? "ok" : "check failure";
  return j;
}

ResultReport run(const JobSpec& job, std::istream& in) {
  for (const auto& info : commands()) {
    if (job.command != info.name) continue;
    if (job.samples < 2 && info.sampling) fail(ErrorKind::InvalidInput, "--samples must be at least 2");
    ResultReport report;
    report.command = job.command;
    info.run(job, in, report);
    return report;
  }
  fail(ErrorKind::InvalidInput, "unknown command " + job.command);
}

Outcome run_command_line(const std::vector<std::string>& args, std::istream& in) {
  Outcome outcome;
  JobSpec job;
  if (const char* env = std::getenv("ABBVLOC_SEED")) {
    try {
      std::size_t used = 0;
      job.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      outcome.exit_code = kInputError;
      outcome.out = error_object("InvalidInput", std::string("ABBVLOC_SEED is not an unsigned integer: ") + env);
      return outcome;
    }
  }

  CLI::App app{"Exact localization formulas for Killing foliations", "abbvloc"};
  app.require_subcommand(1);
  for (const auto& info : commands()) {
    CLI::App* sub = app.add_subcommand(info.name, info.description);
    sub->callback([&job, name = std::string(info.name)] { job.command = name; });
    sub->add_flag("--json", job.json, "Emit a JSON report");
    if (info.sampling) {
      sub->add_option("--seed", job.seed, "Sampling seed (env ABBVLOC_SEED)")->capture_default_str();
      sub->add_option("--samples", job.samples, "Number of sample points")->capture_default_str();
    }
    if (info.input) {
      sub->add_option("--input", job.input_path, "JSON input file, - for stdin (default stdin)");
      sub->add_option("--fixture", job.fixture, "Built-in fixture instead of --input");
    }
    const std::string name = info.name;
    if (name == "stiefel") {
      sub->add_option("--w", job.weights, "Reeb element x,y,z")->required();
    } else if (name == "volume-sphere" || name == "secondary" || info.input) {
      sub->add_option("--weights", job.weights, "Comma-separated rational weights");
    }
    if (info.input || name == "homogeneous") sub->add_option("--reeb", job.reeb, "Reeb element for fixtures");
    if (name != "check-w1" && name != "lawrence" && name != "polytope-volume" && name != "msy-check")
      sub->add_option("--v", job.v, "Evaluate at this v instead of the first sample");
    if (name == "secondary") sub->add_option("--J", job.J, "Multi-index with j_1 + ... + j_l = m in complex degree (real degree 2m), e.g. 1,1; default: all");
    if (name == "check-w1") {
      sub->add_option("--m", job.m, "Complex codimension m")->capture_default_str();
      sub->add_option("--trials", job.trials, "Random weight vectors per multi-index")->capture_default_str();
    }
    if (name == "dh") sub->add_option("--order", job.order, "Highest coefficient index")->capture_default_str();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    if (code == 0) {
      outcome.out = out.str();
      return outcome;
    }
    outcome.exit_code = kInputError;
    outcome.out = error_object("InvalidInput", e.what());
    outcome.err = err.str();
    return outcome;
  }

  try {
    const ResultReport report = run(job, in);
    outcome.out = job.json ? report.to_json().dump(2) + "\n" : report.render_text();
    outcome.exit_code = report.all_pass() ? kSuccess : kCheckFailure;
  } catch (const Error& e) {
    outcome.exit_code = kInputError;
    outcome.out = error_object(to_string(e.kind()), e.what());
    if (!job.json) outcome.err = "error: " + std::string(to_string(e.kind())) + ": " + e.what() + "\n";
  }
  return outcome;
}

}  // namespace abbvloc::cli
