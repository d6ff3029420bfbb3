#pragma once

#include <limits>
#include <string>

namespace ncpart {

/// Nonnegative real or +infinity, kept explicit so infinity never leaks out
/// as a sentinel float.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtendedReal infinity() {
    ExtendedReal r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  /// Finite value; +inf as a double when infinite.
  constexpr double value() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  std::string to_string() const;

  friend constexpr bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

}  // namespace ncpart
