#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncpart/luka_walk.hpp"
#include "ncpart/partition.hpp"
#include "ncpart/rng.hpp"
#include "ncpart/weights.hpp"

namespace ncpart {

enum class SamplerMethod { Auto, DpTable, Rejection };

std::string_view to_string(SamplerMethod m) noexcept;
/// Accepts auto, dp_table, rejection. Throws InvalidArgument.
SamplerMethod parse_sampler_method(std::string_view text);

/// Largest n for which Auto picks DpTable.
inline constexpr std::size_t kDpAutoLimit = 256;
/// Largest n accepted by an explicit DpTable request (table has (n+2)(n+1) entries).
inline constexpr std::size_t kDpMaxN = 2048;

struct SamplerConfig {
  TiltedLaw law;
  std::size_t n = 1;
  std::uint64_t seed = 0;
  SamplerMethod method = SamplerMethod::Auto;
};

/// True when some sequence of n+1 values in supp(pi) sums to n.
bool degree_sequence_feasible(const TiltedLaw& law, std::size_t n);

/// Rotates the increments (d_i - 1) to the unique rotation whose partial sums
/// form a Lukasiewicz walk; the rotation starts after the first minimum of
/// the prefix sums. Throws BadSum.
LukaWalk cycle_shift(const std::vector<std::size_t>& degrees);

/// Exact sampler for n+1 i.i.d. pi values conditioned on summing to n, and for
/// the induced partition law. Tables are built once; sampling is const and
/// may run concurrently with separate Rng instances.
class PartitionSampler {
 public:
  /// Throws Infeasible, InvalidArgument or TooLarge.
  PartitionSampler(const TiltedLaw& law, std::size_t n, SamplerMethod method = SamplerMethod::Auto);

  std::size_t n() const noexcept { return n_; }
  SamplerMethod method() const noexcept { return method_; }

  /// Conditioned degree sequence (d_0, ..., d_n), exchangeable order.
  std::vector<std::size_t> sample_degrees(Rng& rng) const;
  /// Degree sequence of the conditioned tree (after uniform rotation and cycle shift).
  PlaneTree sample_tree(Rng& rng) const;
  NCPartition sample(Rng& rng) const;

 private:
  std::vector<std::size_t> sample_rejection(Rng& rng) const;
  std::vector<std::size_t> sample_dp(Rng& rng) const;

  std::size_t n_;
  SamplerMethod method_;
  std::vector<double> pmf_;          // pi(0..n)
  std::vector<std::size_t> support_; // k <= n with pi(k) > 0
  std::vector<double> suffix_;       // P(X >= k) for k <= n, including mass above n
  std::vector<double> q_;            // dp table, (n+2) rows of (n+1), each scaled to max 1
  std::vector<double> row_scale_;    // log of each row's scale factor
};

std::vector<std::size_t> sample_degree_sequence(const TiltedLaw& law, std::size_t n, Rng& rng,
                                                SamplerMethod method = SamplerMethod::Auto);

/// Draws one partition from the configured law using Rng(cfg.seed).
NCPartition sample_partition(const SamplerConfig& cfg);

}  // namespace ncpart
