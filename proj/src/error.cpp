#include "abbvloc/error.hpp"

namespace abbvloc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquareMatrix: return "NonSquareMatrix";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PoleAtSample: return "PoleAtSample";
    case ErrorKind::MixedPiPowers: return "MixedPiPowers";
    case ErrorKind::InconsistentSamples: return "InconsistentSamples";
    case ErrorKind::AllSamplesPoles: return "AllSamplesPoles";
    case ErrorKind::GoodnessViolation: return "GoodnessViolation";
    case ErrorKind::UnboundedSection: return "UnboundedSection";
    case ErrorKind::NotSimpleVertex: return "NotSimpleVertex";
    case ErrorKind::EdgeConstantFunctional: return "EdgeConstantFunctional";
    case ErrorKind::DegenerateReeb: return "DegenerateReeb";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace abbvloc
