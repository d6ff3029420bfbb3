#include "ncpart/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>

#include "ncpart/bijections.hpp"
#include "ncpart/error.hpp"

namespace ncpart {

namespace {

// Smallest representable total in each residue class modulo the least
// positive support element, by Dijkstra over residues.
bool representable(const std::vector<std::size_t>& positive, std::size_t n) {
  if (n == 0) return true;
  if (positive.empty()) return false;
  const std::size_t a = positive.front();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(a, kUnset);
  using Item = std::pair<std::size_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.push({0, 0});
  while (!queue.empty()) {
    const auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r] || d > n) continue;
    for (std::size_t s : positive) {
      const std::size_t nd = d + s;
      const std::size_t nr = nd % a;
      if (nd <= n && nd < dist[nr]) {
        dist[nr] = nd;
        queue.push({nd, nr});
      }
    }
  }
  return dist[n % a] <= n;
}

std::vector<std::size_t> positive_support(const TiltedLaw& law, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= n; ++k) {
    if (law.pi(k) > 0.0) out.push_back(k);
  }
  return out;
}

}  // namespace

std::string_view to_string(SamplerMethod m) noexcept {
  switch (m) {
    case SamplerMethod::Auto: return "auto";
    case SamplerMethod::DpTable: return "dp_table";
    case SamplerMethod::Rejection: return "rejection";
  }
  return "auto";
}

SamplerMethod parse_sampler_method(std::string_view text) {
  if (text == "auto") return SamplerMethod::Auto;
  if (text == "dp_table" || text == "dp") return SamplerMethod::DpTable;
  if (text == "rejection") return SamplerMethod::Rejection;
  throw Error(ErrorKind::InvalidArgument,
              "unknown sampler method '" + std::string(text) + "' (auto, dp_table, rejection)");
}

bool degree_sequence_feasible(const TiltedLaw& law, std::size_t n) {
  return representable(positive_support(law, n), n);
}

LukaWalk cycle_shift(const std::vector<std::size_t>& degrees) {
  const std::size_t size = degrees.size();
  long long total = 0;
  for (std::size_t d : degrees) total += static_cast<long long>(d) - 1;
  if (size == 0 || total != -1) {
    throw Error(ErrorKind::BadSum, "increments sum to " + std::to_string(total) + ", expected -1");
  }
  long long prefix = 0;
  long long best = std::numeric_limits<long long>::max();
  std::size_t start = 0;
  for (std::size_t j = 0; j < size; ++j) {
    prefix += static_cast<long long>(degrees[j]) - 1;
    if (prefix < best) {
      best = prefix;
      start = j + 1;
    }
  }
  std::vector<std::int64_t> values(size + 1);
  values[0] = 0;
  for (std::size_t i = 0; i < size; ++i) {
    values[i + 1] = values[i] + static_cast<std::int64_t>(degrees[(start + i) % size]) - 1;
  }
  return LukaWalk::from_values(std::move(values));
}

PartitionSampler::PartitionSampler(const TiltedLaw& law, std::size_t n, SamplerMethod method)
    : n_(n), method_(method) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "sampler needs n >= 1");
  if (method_ == SamplerMethod::Auto) {
    method_ = n <= kDpAutoLimit ? SamplerMethod::DpTable : SamplerMethod::Rejection;
  }
  if (method_ == SamplerMethod::DpTable && n > kDpMaxN) {
    throw Error(ErrorKind::TooLarge, "dp_table is limited to n <= " + std::to_string(kDpMaxN));
  }
  pmf_ = law.pmf(n);
  for (std::size_t k = 0; k <= n; ++k) {
    if (pmf_[k] > 0.0) support_.push_back(k);
  }
  std::vector<std::size_t> positive(support_.begin(), support_.end());
  std::erase(positive, std::size_t{0});
  if (pmf_[0] <= 0.0 || !representable(positive, n)) {
    throw Error(ErrorKind::Infeasible, "no tree with " + std::to_string(n + 1) +
                                           " vertices has all outdegrees in the support of pi");
  }

  suffix_.assign(n + 2, 0.0);
  suffix_[n + 1] = law.tail_above(n);
  for (std::size_t k = n + 1; k-- > 0;) suffix_[k] = suffix_[k + 1] + pmf_[k];

  if (method_ == SamplerMethod::DpTable) {
    // Row m holds P(X_1 + ... + X_m = s) / exp(row_scale_[m]), rescaled to max 1.
    const std::size_t width = n + 1;
    q_.assign((n + 2) * width, 0.0);
    row_scale_.assign(n + 2, 0.0);
    q_[0] = 1.0;
    for (std::size_t m = 1; m <= n + 1; ++m) {
      const double* prev = &q_[(m - 1) * width];
      double* row = &q_[m * width];
      double peak = 0.0;
      for (std::size_t s = 0; s <= n; ++s) {
        double acc = 0.0;
        for (std::size_t k : support_) {
          if (k > s) break;
          acc += pmf_[k] * prev[s - k];
        }
        row[s] = acc;
        peak = std::max(peak, acc);
      }
      for (std::size_t s = 0; s <= n; ++s) row[s] /= peak;
      row_scale_[m] = row_scale_[m - 1] + std::log(peak);
    }
  }
}

std::vector<std::size_t> PartitionSampler::sample_rejection(Rng& rng) const {
  std::vector<std::pair<std::size_t, std::uint64_t>> counts;
  for (;;) {
    counts.clear();
    std::uint64_t remaining = n_ + 1;
    std::size_t sum = 0;
    bool rejected = false;
    // N_k ~ Bin(remaining, pi(k) / P(X >= k)) reproduces multinomial(n+1, pi).
    for (std::size_t k : support_) {
      if (remaining == 0) break;
      if (sum + k * remaining > n_) {
        rejected = true;
        break;
      }
      const double p = std::min(1.0, pmf_[k] / suffix_[k]);
      std::binomial_distribution<std::uint64_t> draw(remaining, p);
      const std::uint64_t c = draw(rng);
      if (c == 0) continue;
      counts.emplace_back(k, c);
      remaining -= c;
      sum += k * c;
    }
    if (rejected || remaining != 0 || sum != n_) continue;

    std::vector<std::size_t> degrees;
    degrees.reserve(n_ + 1);
    for (const auto& [k, c] : counts) degrees.insert(degrees.end(), c, k);
    for (std::size_t i = degrees.size(); i > 1; --i) {
      std::swap(degrees[i - 1], degrees[rng.below(i)]);
    }
    return degrees;
  }
}

std::vector<std::size_t> PartitionSampler::sample_dp(Rng& rng) const {
  const std::size_t width = n_ + 1;
  std::vector<std::size_t> degrees(n_ + 1);
  std::size_t s = n_;
  for (std::size_t i = 0; i <= n_; ++i) {
    const std::size_t m = n_ + 1 - i;
    const double* prev = &q_[(m - 1) * width];
    const double ratio = std::exp(row_scale_[m - 1] - row_scale_[m]) / q_[m * width + s];
    double total = 0.0;
    for (std::size_t k : support_) {
      if (k > s) break;
      total += pmf_[k] * prev[s - k];
    }
    total *= ratio;
    if (!(total > 1e-12) || !std::isfinite(total)) {
      throw Error(ErrorKind::NonconvergentSeries, "dp_table conditional lost normalization");
    }
    const double target = rng.uniform01() * total / ratio;
    double acc = 0.0;
    std::size_t chosen = support_.front();
    for (std::size_t k : support_) {
      if (k > s) break;
      const double p = pmf_[k] * prev[s - k];
      if (p <= 0.0) continue;
      chosen = k;
      acc += p;
      if (target < acc) break;
    }
    degrees[i] = chosen;
    s -= chosen;
  }
  return degrees;
}

std::vector<std::size_t> PartitionSampler::sample_degrees(Rng& rng) const {
  return method_ == SamplerMethod::DpTable ? sample_dp(rng) : sample_rejection(rng);
}

namespace {

std::vector<std::size_t> rotate_uniformly(std::vector<std::size_t> degrees, Rng& rng) {
  const std::size_t r = rng.below(degrees.size());
  std::rotate(degrees.begin(), degrees.begin() + static_cast<std::ptrdiff_t>(r), degrees.end());
  return degrees;
}

}  // namespace

PlaneTree PartitionSampler::sample_tree(Rng& rng) const {
  return tree_from_walk(cycle_shift(rotate_uniformly(sample_degrees(rng), rng)));
}

NCPartition PartitionSampler::sample(Rng& rng) const {
  return partition_from_walk(cycle_shift(rotate_uniformly(sample_degrees(rng), rng)));
}

std::vector<std::size_t> sample_degree_sequence(const TiltedLaw& law, std::size_t n, Rng& rng,
                                                SamplerMethod method) {
  return PartitionSampler(law, n, method).sample_degrees(rng);
}

NCPartition sample_partition(const SamplerConfig& cfg) {
  Rng rng(cfg.seed);
  return PartitionSampler(cfg.law, cfg.n, cfg.method).sample(rng);
}

}  // namespace ncpart
