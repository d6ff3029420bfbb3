#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncpart {

/// Failure categories surfaced by the library. The CLI prints the name
/// returned by `to_string` so scripts can match on it.
enum class ErrorKind {
  BallotViolation,
  SumMismatch,
  InvalidWalk,
  NotAPartition,
  Crossing,
  RhoZero,
  NonconvergentSeries,
  DegenerateSet,
  NotDivisible,
  TooLarge,
  Infeasible,
  BadSum,
  DegeneratePi,
  InfiniteVariance,
  NotCritical,
  NegativeCumulant,
  DiracInput,
  RhoUndetermined,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by partition validation; carries a<b<c<d with {a,c} in one block
/// and {b,d} in another.
class CrossingError : public Error {
 public:
  explicit CrossingError(std::array<std::size_t, 4> witness);

  const std::array<std::size_t, 4>& witness() const noexcept { return witness_; }

 private:
  std::array<std::size_t, 4> witness_;
};

}  // namespace ncpart
