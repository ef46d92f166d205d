#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "abbvloc/io.hpp"
#include "abbvloc/pi_scalar.hpp"

namespace abbvloc::cli {

struct JobSpec {
  std::string command;
  std::optional<std::string> input_path;  // "-" reads standard input
  std::optional<std::string> fixture;
  std::optional<std::string> weights;
  std::optional<std::string> reeb;
  std::optional<std::string> v;
  std::optional<std::string> J;
  int m = 2;
  std::size_t trials = 50;
  std::size_t order = 4;
  std::size_t samples = 10;
  std::uint64_t seed = 42;
  bool json = false;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ResultReport {
  std::string command;
  std::optional<PiScalar> exact;
  /// Extra named outputs, rendered in insertion order.
  io::Json fields = io::Json::object();
  std::vector<Check> checks;

  bool all_pass() const;
  std::string render_text() const;
  io::Json to_json() const;
};

enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kInputError = 2 };

/// Executes one job. Throws abbvloc::Error on input errors.
ResultReport run(const JobSpec& job, std::istream& in);

struct Outcome {
  int exit_code = kSuccess;
  std::string out;
  std::string err;
};

/// Full command line handling: argument parsing, dispatch, rendering and
/// exit codes. `args` excludes the program name.
Outcome run_command_line(const std::vector<std::string>& args, std::istream& in);

}  // namespace abbvloc::cli
