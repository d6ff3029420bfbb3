#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ncpart/membership.hpp"
#include "ncpart/partition.hpp"
#include "ncpart/sampler.hpp"
#include "ncpart/weights.hpp"

namespace ncpart {

struct BlockReport {
  std::size_t n = 0;
  /// Size of the block containing 1 (0 for the empty partition).
  std::size_t s1 = 0;
  /// histogram[k] = N_k, number of blocks of size k, for k = 0..n.
  std::vector<std::size_t> histogram;
  /// zeta[i] = number of blocks whose size lies in the i-th requested set.
  std::vector<std::size_t> zeta;
  /// Largest block sizes, descending, at most m of them.
  std::vector<std::size_t> largest;

  std::size_t block_count() const;
};

BlockReport block_report(const NCPartition& p, const std::vector<MembershipSet>& sets,
                         std::size_t m = 10);

/// Limits of the root-block law (k pi(k)) and the uniform-block law
/// (pi(k) / (1 - pi(0))).
class LimitBlockLaws {
 public:
  /// Throws DegeneratePi when pi(0) = 1.
  explicit LimitBlockLaws(TiltedLaw law);

  double root(std::size_t k) const { return static_cast<double>(k) * law_.pi(k); }
  double typical(std::size_t k) const { return k == 0 ? 0.0 : law_.pi(k) / (1.0 - law_.pi(0)); }
  const TiltedLaw& law() const noexcept { return law_; }

 private:
  TiltedLaw law_;
};

LimitBlockLaws limit_block_laws(const TiltedLaw& law);

/// pi(A) = sum_{r in A} pi(r).
double set_mass(const TiltedLaw& law, const MembershipSet& a);

/// Limiting covariance of (zeta_A - n pi(A)) / sqrt(n) and the same for B,
/// in the form -pi(A)pi(B) - S_A S_B / sigma^2 with S_A = sum_{r in A}(r-1)pi(r)
/// (variance pi(A)(1-pi(A)) - S_A^2 / sigma^2 when A = B). Sets must be equal
/// or disjoint. Throws InfiniteVariance, NotCritical or InvalidArgument.
double clt_covariance(const TiltedLaw& law, const MembershipSet& a, const MembershipSet& b);
double clt_variance(const TiltedLaw& law, const MembershipSet& a);

/// The same quantities with the correction term sum_{r in A}(r-1)^2 pi(r) / sigma^2
/// in place of S_A^2, and the product of such sums in the covariance.
double clt_covariance_printed(const TiltedLaw& law, const MembershipSet& a,
                              const MembershipSet& b);
double clt_variance_printed(const TiltedLaw& law, const MembershipSet& a);

struct SuiteRow {
  std::string statistic;
  std::string key;
  double observed = 0.0;
  double predicted = 0.0;
  double std_error = 0.0;
};

struct EmpiricalReport {
  std::size_t n = 0;
  std::size_t replicas = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteRow> rows;

  /// Row lookup by statistic and key; throws InvalidArgument if absent.
  const SuiteRow& row(const std::string& statistic, const std::string& key) const;
};

struct SuiteOptions {
  /// Root and typical block laws are tabulated for k = 1..max_k.
  std::size_t max_k = 10;
  /// Worker threads; 0 means the hardware count capped by NCPART_THREADS.
  std::size_t threads = 0;
};

/// Draws `replicas` partitions (replica i uses Rng(cfg.seed, i)) and compares
/// block statistics with their limits. Rows:
///   s1_law k, typical_block k, zeta_mean A, zeta_variance A, zeta_variance_printed A.
EmpiricalReport empirical_suite(const SamplerConfig& cfg, const std::vector<MembershipSet>& sets,
                                std::size_t replicas, const SuiteOptions& options = {});

/// Worker count honouring NCPART_THREADS.
std::size_t worker_threads(std::size_t requested = 0);

/// CSV with columns statistic,k_or_set,observed,predicted,stderr,n,replicas,seed.
void write_report_csv(std::ostream& out, const EmpiricalReport& report);

}  // namespace ncpart
