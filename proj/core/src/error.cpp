#include "ncpart/error.hpp"

namespace ncpart {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BallotViolation: return "BallotViolation";
    case ErrorKind::SumMismatch: return "SumMismatch";
    case ErrorKind::InvalidWalk: return "InvalidWalk";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::Crossing: return "Crossing";
    case ErrorKind::RhoZero: return "RhoZero";
    case ErrorKind::NonconvergentSeries: return "NonconvergentSeries";
    case ErrorKind::DegenerateSet: return "DegenerateSet";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::BadSum: return "BadSum";
    case ErrorKind::DegeneratePi: return "DegeneratePi";
    case ErrorKind::InfiniteVariance: return "InfiniteVariance";
    case ErrorKind::NotCritical: return "NotCritical";
    case ErrorKind::NegativeCumulant: return "NegativeCumulant";
    case ErrorKind::DiracInput: return "DiracInput";
    case ErrorKind::RhoUndetermined: return "RhoUndetermined";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

CrossingError::CrossingError(std::array<std::size_t, 4> witness)
    : Error(ErrorKind::Crossing,
            "blocks cross at (" + std::to_string(witness[0]) + ", " + std::to_string(witness[1]) +
                ", " + std::to_string(witness[2]) + ", " + std::to_string(witness[3]) + ")"),
      witness_(witness) {}

}  // namespace ncpart
