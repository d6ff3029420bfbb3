#pragma once

#include <cstdint>
#include <random>

namespace ncpart {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seedable 64-bit generator (mt19937_64). Independent streams are obtained
/// by hashing (seed, stream) into the engine seed.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform on {0, ..., bound - 1}, unbiased.
  std::uint64_t below(std::uint64_t bound);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace ncpart
