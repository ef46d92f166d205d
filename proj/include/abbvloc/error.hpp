#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abbvloc {

enum class ErrorKind {
  NonSquareMatrix,
  SingularMatrix,
  DimensionMismatch,
  PoleAtSample,
  MixedPiPowers,
  InconsistentSamples,
  AllSamplesPoles,
  GoodnessViolation,
  UnboundedSection,
  NotSimpleVertex,
  EdgeConstantFunctional,
  DegenerateReeb,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace abbvloc
