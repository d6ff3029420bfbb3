#include "ncpart/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <thread>

#include "ncpart/error.hpp"

namespace ncpart {

std::size_t BlockReport::block_count() const {
  std::size_t total = 0;
  for (std::size_t c : histogram) total += c;
  return total;
}

BlockReport block_report(const NCPartition& p, const std::vector<MembershipSet>& sets,
                         std::size_t m) {
  BlockReport r;
  r.n = p.n();
  r.histogram.assign(p.n() + 1, 0);
  r.zeta.assign(sets.size(), 0);
  if (p.block_count() > 0) r.s1 = p.block(0).size();
  std::size_t biggest = 0;
  for (const Block& b : p.blocks()) {
    ++r.histogram[b.size()];
    biggest = std::max(biggest, b.size());
  }
  // Membership is evaluated once per distinct size.
  for (std::size_t k = 1; k <= biggest; ++k) {
    if (r.histogram[k] == 0) continue;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i].contains(k)) r.zeta[i] += r.histogram[k];
    }
  }
  for (std::size_t k = biggest; k >= 1 && r.largest.size() < m; --k) {
    for (std::size_t c = 0; c < r.histogram[k] && r.largest.size() < m; ++c) {
      r.largest.push_back(k);
    }
  }
  return r;
}

LimitBlockLaws::LimitBlockLaws(TiltedLaw law) : law_(std::move(law)) {
  if (law_.pi(0) >= 1.0) throw Error(ErrorKind::DegeneratePi, "pi(0) = 1");
}

LimitBlockLaws limit_block_laws(const TiltedLaw& law) { return LimitBlockLaws(law); }

namespace {

// sum_{k >= 1, k in A} f(k) pi(k), truncated once pi(k) k^2 is negligible.
template <class F>
double sum_over(const TiltedLaw& law, const MembershipSet& a, F f) {
  double sum = 0.0;
  const std::size_t bound =
      law.weights().finite_support() ? law.weights().max_degree() : std::size_t{1'000'000};
  std::size_t quiet = 0;
  for (std::size_t k = 1; k <= bound; ++k) {
    const double p = law.pi(k);
    if (p > 0.0 && a.contains(k)) sum += f(static_cast<double>(k)) * p;
    const double kd = static_cast<double>(k);
    quiet = (p * (kd + 1.0) * (kd + 1.0) < 1e-18) ? quiet + 1 : 0;
    if (quiet >= 64 && k > 64) break;
  }
  return sum;
}

double checked_sigma2(const TiltedLaw& law) {
  if (!law.critical()) {
    throw Error(ErrorKind::NotCritical, "the normal limit needs mean(pi) = 1 (nu >= 1)");
  }
  if (law.variance().is_infinite()) {
    throw Error(ErrorKind::InfiniteVariance, "pi has infinite variance");
  }
  return law.variance().value();
}

void require_equal_or_disjoint(const TiltedLaw& law, const MembershipSet& a,
                               const MembershipSet& b) {
  if (a == b) return;
  if (sum_over(law, a, [&](double k) { return b.contains(static_cast<std::size_t>(k)) ? 1.0 : 0.0; }) >
      0.0) {
    throw Error(ErrorKind::InvalidArgument,
                "covariance is defined for disjoint sets: " + a.name() + " and " + b.name());
  }
  // Sets may still overlap outside the support of pi; that overlap is irrelevant.
}

}  // namespace

double set_mass(const TiltedLaw& law, const MembershipSet& a) {
  return sum_over(law, a, [](double) { return 1.0; });
}

double clt_covariance(const TiltedLaw& law, const MembershipSet& a, const MembershipSet& b) {
  const double sigma2 = checked_sigma2(law);
  require_equal_or_disjoint(law, a, b);
  const double pa = set_mass(law, a);
  const double sa = sum_over(law, a, [](double r) { return r - 1.0; });
  if (a == b) return pa * (1.0 - pa) - sa * sa / sigma2;
  const double pb = set_mass(law, b);
  const double sb = sum_over(law, b, [](double r) { return r - 1.0; });
  return -pa * pb - sa * sb / sigma2;
}

double clt_variance(const TiltedLaw& law, const MembershipSet& a) {
  return clt_covariance(law, a, a);
}

double clt_covariance_printed(const TiltedLaw& law, const MembershipSet& a,
                              const MembershipSet& b) {
  const double sigma2 = checked_sigma2(law);
  require_equal_or_disjoint(law, a, b);
  const double pa = set_mass(law, a);
  auto square = [](double r) { return (r - 1.0) * (r - 1.0); };
  const double qa = sum_over(law, a, square);
  if (a == b) return pa * (1.0 - pa) - qa / sigma2;
  const double pb = set_mass(law, b);
  const double qb = sum_over(law, b, square);
  return -pa * pb - qa * qb / sigma2;
}

double clt_variance_printed(const TiltedLaw& law, const MembershipSet& a) {
  return clt_covariance_printed(law, a, a);
}

const SuiteRow& EmpiricalReport::row(const std::string& statistic, const std::string& key) const {
  for (const SuiteRow& r : rows) {
    if (r.statistic == statistic && r.key == key) return r;
  }
  throw Error(ErrorKind::InvalidArgument, "no report row " + statistic + "/" + key);
}

std::size_t worker_threads(std::size_t requested) {
  std::size_t count = requested;
  if (count == 0) count = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("NCPART_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(cap, &end, 10);
    if (end != cap && value > 0) count = std::min<std::size_t>(count, value);
  }
  return count;
}

namespace {

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double fourth = 0.0;    // central fourth moment
};

Moments moments_of(const std::vector<double>& xs) {
  Moments m;
  const double r = static_cast<double>(xs.size());
  for (double x : xs) m.mean += x;
  m.mean /= r;
  double m2 = 0.0;
  for (double x : xs) {
    const double d = x - m.mean;
    m2 += d * d;
    m.fourth += d * d * d * d;
  }
  m.variance = xs.size() > 1 ? m2 / (r - 1.0) : 0.0;
  m.fourth /= r;
  return m;
}

double guarded(const std::function<double()>& f) {
  try {
    return f();
  } catch (const Error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

}  // namespace

EmpiricalReport empirical_suite(const SamplerConfig& cfg, const std::vector<MembershipSet>& sets,
                                std::size_t replicas, const SuiteOptions& options) {
  if (replicas == 0) throw Error(ErrorKind::InvalidArgument, "replicas must be positive");
  const PartitionSampler sampler(cfg.law, cfg.n, cfg.method);
  const std::size_t max_k = options.max_k;
  const std::size_t n = cfg.n;

  std::vector<std::size_t> s1(replicas);
  std::vector<std::vector<double>> typical(max_k + 1, std::vector<double>(replicas));
  std::vector<std::vector<double>> zeta(sets.size(), std::vector<double>(replicas));

  const std::size_t threads = std::min(worker_threads(options.threads), replicas);
  std::vector<std::exception_ptr> failures(threads);
  auto work = [&](std::size_t t) {
    try {
      for (std::size_t i = t; i < replicas; i += threads) {
        Rng rng(cfg.seed, i);
        const BlockReport rep = block_report(sampler.sample(rng), sets, 0);
        const double blocks = static_cast<double>(rep.block_count());
        s1[i] = rep.s1;
        for (std::size_t k = 1; k <= max_k; ++k) {
          typical[k][i] = k <= n ? static_cast<double>(rep.histogram[k]) / blocks : 0.0;
        }
        for (std::size_t a = 0; a < sets.size(); ++a) {
          zeta[a][i] = static_cast<double>(rep.zeta[a]);
        }
      }
    } catch (...) {
      failures[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  EmpiricalReport report;
  report.n = n;
  report.replicas = replicas;
  report.seed = cfg.seed;
  const double r = static_cast<double>(replicas);
  const TiltedLaw& law = cfg.law;

  for (std::size_t k = 1; k <= max_k; ++k) {
    const double hits = static_cast<double>(std::count(s1.begin(), s1.end(), k));
    const double p = hits / r;
    report.rows.push_back({"s1_law", std::to_string(k), p, static_cast<double>(k) * law.pi(k),
                           std::sqrt(p * (1.0 - p) / r)});
  }
  const double pi0 = law.pi(0);
  for (std::size_t k = 1; k <= max_k; ++k) {
    const Moments m = moments_of(typical[k]);
    report.rows.push_back({"typical_block", std::to_string(k), m.mean, law.pi(k) / (1.0 - pi0),
                           std::sqrt(m.variance / r)});
  }
  const double nd = static_cast<double>(n);
  for (std::size_t a = 0; a < sets.size(); ++a) {
    const std::string key = sets[a].name();
    const double mass = set_mass(law, sets[a]);
    std::vector<double> ratio(replicas);
    std::vector<double> scaled(replicas);
    for (std::size_t i = 0; i < replicas; ++i) {
      ratio[i] = zeta[a][i] / nd;
      scaled[i] = (zeta[a][i] - nd * mass) / std::sqrt(nd);
    }
    const Moments mr = moments_of(ratio);
    report.rows.push_back({"zeta_mean", key, mr.mean, mass, std::sqrt(mr.variance / r)});
    const Moments ms = moments_of(scaled);
    const double se = std::sqrt(std::max(0.0, ms.fourth - ms.variance * ms.variance) / r);
    report.rows.push_back({"zeta_variance", key, ms.variance,
                           guarded([&] { return clt_variance(law, sets[a]); }), se});
    report.rows.push_back({"zeta_variance_printed", key, ms.variance,
                           guarded([&] { return clt_variance_printed(law, sets[a]); }), se});
  }
  return report;
}

void write_report_csv(std::ostream& out, const EmpiricalReport& report) {
  out << "statistic,k_or_set,observed,predicted,stderr,n,replicas,seed\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(12);
  for (const SuiteRow& row : report.rows) {
    const bool quote = row.key.find(',') != std::string::npos;
    out << row.statistic << ',' << (quote ? '"' + row.key + '"' : row.key) << ',' << row.observed << ',' << row.predicted << ','
        << row.std_error << ',' << report.n << ',' << report.replicas << ',' << report.seed << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace ncpart
