#include "ncpart/verify/oracles.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numbers>

#include "ncpart/error.hpp"
#include "ncpart/series.hpp"

namespace ncpart::verify {

bool noncrossing_by_quadruples(const std::vector<Block>& blocks, std::size_t n) {
  std::vector<std::size_t> label(n + 1, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t x : blocks[b]) label[x] = b;
  }
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = a + 1; b <= n; ++b) {
      for (std::size_t c = b + 1; c <= n; ++c) {
        if (label[a] != label[c] || label[a] == label[b]) continue;
        for (std::size_t d = c + 1; d <= n; ++d) {
          if (label[d] == label[b]) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<Block>> all_set_partitions(std::size_t n) {
  std::vector<std::vector<Block>> out;
  std::vector<std::size_t> rgs(n + 1, 0);
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t x, std::size_t used) {
    if (x > n) {
      std::vector<Block> blocks(used);
      for (std::size_t y = 1; y <= n; ++y) blocks[rgs[y]].push_back(y);
      out.push_back(std::move(blocks));
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      rgs[x] = b;
      grow(x + 1, std::max(used, b + 1));
    }
  };
  grow(1, 0);
  return out;
}

NCPartition kreweras_by_refinement(const NCPartition& p) {
  const std::size_t n = p.n();
  if (n > 8) throw Error(ErrorKind::TooLarge, "refinement search is limited to n <= 8");
  // Element i of P sits at 2i - 1 and element i' of P' at 2i.
  std::vector<Block> lifted;
  for (const Block& b : p.blocks()) {
    Block l;
    for (std::size_t x : b) l.push_back(2 * x - 1);
    lifted.push_back(std::move(l));
  }
  std::optional<NCPartition> best;
  brute_force_enumerate(n, [&](const NCPartition& q) {
    std::vector<Block> joint = lifted;
    for (const Block& b : q.blocks()) {
      Block l;
      for (std::size_t x : b) l.push_back(2 * x);
      joint.push_back(std::move(l));
    }
    if (!noncrossing_by_quadruples(joint, 2 * n)) return;
    if (!best || q.block_count() < best->block_count()) best = q;
  });
  return *best;
}

NCPartition partition_from_walk_by_definition(const LukaWalk& w) {
  const std::size_t n = w.n();
  std::vector<Block> blocks;
  for (std::size_t j = 0; j <= n; ++j) {
    const std::int64_t k = w[j + 1] - w[j] + 1;
    Block block;
    for (std::int64_t l = 1; l <= k; ++l) {
      const std::int64_t target = w[j + 1] - (l - 1);
      for (std::size_t m = j + 1; m <= n + 1; ++m) {
        if (w[m] == target) {
          block.push_back(m);
          break;
        }
      }
    }
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  return validate_partition(std::move(blocks), n);
}

ExactLaw exact_partition_law(const WeightSeq& w, std::size_t n) {
  ExactLaw law;
  double total = 0.0;
  brute_force_enumerate(n, [&](const NCPartition& p) {
    double weight = 1.0;
    for (const Block& b : p.blocks()) weight *= w(b.size());
    if (weight <= 0.0) return;
    law.index.emplace(p.blocks(), law.partitions.size());
    law.partitions.push_back(p);
    law.probabilities.push_back(weight);
    total += weight;
  });
  for (double& q : law.probabilities) q /= total;
  return law;
}

double chi_square_pvalue(const std::vector<std::size_t>& observed,
                         const std::vector<double>& probabilities) {
  double total = 0.0;
  for (std::size_t c : observed) total += static_cast<double>(c);
  double stat = 0.0;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (probabilities[i] <= 0.0) {
      if (observed[i] > 0) return 0.0;
      continue;
    }
    const double expected = total * probabilities[i];
    const double d = static_cast<double>(observed[i]) - expected;
    stat += d * d / expected;
    ++cells;
  }
  if (cells < 2) return 1.0;
  boost::math::chi_squared_distribution<double> dist(static_cast<double>(cells - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double m = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size();) {
    std::size_t j = i;
    while (j < sample.size() && sample[j] == sample[i]) ++j;
    const double f = cdf(sample[i]);
    d = std::max({d, std::abs(static_cast<double>(j) / m - f), std::abs(f - static_cast<double>(i) / m)});
    i = j;
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double trapezoid_chord_cdf(double x, std::size_t steps) {
  if (x <= 1.0 / 3.0) return 0.0;
  if (x >= 0.5) return 1.0;
  const double a = std::sqrt(1.0 - 2.0 * x);
  const double b = 1.0 / std::sqrt(3.0);
  auto g = [](double u) {
    const double y = 0.5 * (1.0 - u * u);
    return (3.0 * y - 1.0) / (y * y * (1.0 - y) * (1.0 - y)) / std::numbers::pi;
  };
  const double h = (b - a) / static_cast<double>(steps);
  double sum = 0.5 * (g(a) + g(b));
  for (std::size_t i = 1; i < steps; ++i) sum += g(a + h * static_cast<double>(i));
  return sum * h;
}

std::vector<double> exact_s1_law(const WeightSeq& w, std::size_t n) {
  std::vector<double> law(n + 1, 0.0);
  double total = 0.0;
  brute_force_enumerate(n, [&](const NCPartition& p) {
    double weight = 1.0;
    for (const Block& b : p.blocks()) weight *= w(b.size());
    law[p.block(0).size()] += weight;
    total += weight;
  });
  for (double& q : law) q /= total;
  return law;
}

}  // namespace ncpart::verify
