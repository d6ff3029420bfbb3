#include "ncpart/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <functional>
#include <ostream>
#include <set>
#include <thread>

#include "ncpart/bijections.hpp"
#include "ncpart/error.hpp"
#include "ncpart/freeprob.hpp"
#include "ncpart/geometry.hpp"
#include "ncpart/luka_walk.hpp"
#include "ncpart/membership.hpp"
#include "ncpart/sampler.hpp"
#include "ncpart/series.hpp"
#include "ncpart/stats.hpp"
#include "ncpart/verify/oracles.hpp"
#include "ncpart/weights.hpp"

namespace ncpart::verify {
namespace {

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

// Counts failures of one property and keeps the first counterexample.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases_;
    if (ok) return;
    if (failures_++ == 0) first_ = what();
  }

  Check check() const {
    Check c{name_, failures_ == 0, fmt("%zu cases, %zu failures", cases_, failures_)};
    if (failures_ > 0) c.detail += "; first: " + first_;
    return c;
  }

 private:
  std::string name_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::string blocks_text(const NCPartition& p) {
  std::string s = "{";
  for (const Block& b : p.blocks()) {
    s += "{";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    s += "}";
  }
  return s + "}";
}

Check within(const std::string& name, double observed, double target, double tol) {
  const double err = std::abs(observed - target);
  return {name, err < tol, fmt("observed %.10g, target %.10g, |diff| %.3g, tol %.3g", observed, target, err, tol)};
}

// Round-trip identities shared by the exhaustive and randomized passes.
struct RoundTrips {
  Tally circ{"p_circ(t_circ(P)) = P"};
  Tally bullet{"p_bullet(t_bullet(P)) = P"};
  Tally direct{"b_transform(t_circ(P)) = t_bullet(P)"};
  Tally walk{"partition_from_walk(path(t_circ(P))) = P"};
  Tally path{"tree_from_walk(path(t)) = t"};
  Tally trees{"t_circ(p_circ(t)) = t and t_bullet(p_bullet(t)) = t"};
  Tally krew{"|P| + |K(P)| = n + 1"};

  void partition(const NCPartition& p) {
    const PlaneTree tc = t_circ(p);
    const PlaneTree tb = t_bullet(p);
    const LukaWalk w = lukasiewicz_path(tc);
    auto show = [&] { return blocks_text(p); };
    circ.expect(p_circ(tc) == p, show);
    bullet.expect(p_bullet(tb) == p, show);
    direct.expect(b_transform(tc) == tb, show);
    walk.expect(partition_from_walk(w) == p, show);
    path.expect(tree_from_walk(w) == tc, show);
    krew.expect(p.block_count() + kreweras(p).block_count() == p.n() + 1, show);
  }

  void tree(const PlaneTree& t) {
    trees.expect(t_circ(p_circ(t)) == t && t_bullet(p_bullet(t)) == t,
                 [&] { return fmt("tree with %zu vertices", t.vertex_count()); });
  }

  void append(std::vector<Check>& out, const std::string& prefix) const {
    for (const Tally* t : {&circ, &bullet, &direct, &walk, &path, &trees, &krew}) {
      Check c = t->check();
      c.name = prefix + c.name;
      out.push_back(std::move(c));
    }
  }
};

CriterionResult bijections(Scale scale) {
  CriterionResult r{1, "bijection round-trips", {}, 0.0};
  const std::size_t max_n = scale == Scale::Full ? 9 : 7;
  const std::size_t max_krew_n = scale == Scale::Full ? 7 : 5;
  const std::size_t big_n = scale == Scale::Full ? 100000 : 20000;
  const std::size_t seeds = scale == Scale::Full ? 100 : 10;

  RoundTrips exhaustive;
  Tally images{"t_circ is a bijection onto trees with n+1 vertices"};
  Tally definition{"monotone-stack walk decoding = first-passage definition"};
  Tally krew_oracle{"kreweras = max-refinement complement"};
  Tally validation{"validate_partition accepts exactly the quadruple-free partitions"};
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::set<std::vector<std::size_t>> seen;
    std::size_t count = 0;
    brute_force_enumerate(n, [&](const NCPartition& p) {
      ++count;
      exhaustive.partition(p);
      const PlaneTree t = t_circ(p);
      seen.emplace(t.degrees().begin(), t.degrees().end());
      definition.expect(partition_from_walk_by_definition(lukasiewicz_path(t_circ(p))) == p,
                        [&] { return blocks_text(p); });
      if (n <= max_krew_n) {
        krew_oracle.expect(kreweras(p) == kreweras_by_refinement(p), [&] { return blocks_text(p); });
      }
    });
    std::size_t tree_count = 0;
    enumerate_trees(n, [&](const PlaneTree& t) {
      ++tree_count;
      exhaustive.tree(t);
    });
    const BigInt cat = catalan(n);
    images.expect(seen.size() == count && BigInt(count) == cat && BigInt(tree_count) == cat,
                  [&] { return fmt("n = %zu: %zu partitions, %zu images, %zu trees", n, count, seen.size(), tree_count); });
    for (const auto& blocks : all_set_partitions(n)) {
      bool accepted = true;
      try {
        validate_partition(blocks, n);
      } catch (const Error&) {
        accepted = false;
      }
      validation.expect(accepted == noncrossing_by_quadruples(blocks, n), [&] { return fmt("n = %zu", n); });
    }
  }
  exhaustive.append(r.checks, fmt("exhaustive n <= %zu: ", max_n));
  for (const Tally* t : {&images, &definition, &validation}) r.checks.push_back(t->check());
  r.checks.push_back(krew_oracle.check());
  r.checks.back().name += fmt(" (n <= %zu)", max_krew_n);

  RoundTrips randomized;
  const PartitionSampler sampler(equivalent_distribution(WeightSeq::membership(MembershipSet::all())), big_n);
  for (std::size_t s = 0; s < seeds; ++s) {
    Rng rng(1000 + s);
    randomized.tree(sampler.sample_tree(rng));
    randomized.partition(sampler.sample(rng));
  }
  randomized.append(r.checks, fmt("random n = %zu, %zu seeds: ", big_n, seeds));
  return r;
}

CriterionResult exact_counts(Scale scale) {
  CriterionResult r{2, "exact counts", {}, 0.0};
  const std::size_t brute_n = scale == Scale::Full ? 12 : 10;

  Tally cat{"Z_n(w = 1) = Catalan(n), n <= 60"};
  std::vector<Rational> ones(61, Rational(1));
  for (std::size_t n = 1; n <= 60; ++n) {
    // Catalan from the binomial formula, independent of the series code.
    BigInt c = 1;
    for (std::size_t i = 0; i < n; ++i) c = c * (4 * i + 2) / (i + 2);
    const Rational z = tree_partition_function(std::span<const Rational>(ones.data(), n + 1), n);
    cat.expect(z == Rational(c), [&] { return fmt("n = %zu", n); });
  }
  r.checks.push_back(cat.check());

  Tally closed{"count_constrained = closed forms, k in {2,3,4}, kn <= 24"};
  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::size_t m = 1; k * m <= 24; ++m) {
      closed.expect(count_constrained(MembershipSet::finite({k}), k * m) ==
                        closed_form_counts(k, m, ClosedFormMode::Equal),
                    [&] { return fmt("equal k = %zu, n = %zu", k, k * m); });
      closed.expect(count_constrained(MembershipSet::multiples(k), k * m) ==
                        closed_form_counts(k, m, ClosedFormMode::Divisible),
                    [&] { return fmt("divisible k = %zu, n = %zu", k, k * m); });
    }
  }
  r.checks.push_back(closed.check());

  Tally brute{fmt("series and brute-force enumeration agree, n <= %zu", brute_n)};
  const std::vector<MembershipSet> sets{MembershipSet::all(), MembershipSet::finite({2}), MembershipSet::even(),
                                        MembershipSet::odd(), MembershipSet::prime(), MembershipSet::finite({1, 3})};
  // Non-uniform rational weights exercise the Lagrange inversion beyond 0/1 sequences.
  std::vector<Rational> mixed(brute_n + 1);
  mixed[0] = 1;
  for (std::size_t k = 1; k <= brute_n; ++k) mixed[k] = Rational(BigInt(k % 3 + 1), BigInt(k + 1));
  for (std::size_t n = 1; n <= brute_n; ++n) {
    std::vector<BigInt> counts(sets.size(), 0);
    Rational weighted = 0;
    brute_force_enumerate(n, [&](const NCPartition& p) {
      Rational prod = 1;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        bool ok = true;
        for (const Block& b : p.blocks()) ok = ok && sets[i].contains(b.size());
        if (ok) counts[i] += 1;
      }
      for (const Block& b : p.blocks()) prod *= mixed[b.size()];
      weighted += prod;
    });
    for (std::size_t i = 0; i < sets.size(); ++i) {
      brute.expect(count_constrained(sets[i], n) == counts[i],
                   [&] { return fmt("set %s, n = %zu", sets[i].name().c_str(), n); });
    }
    brute.expect(tree_partition_function(std::span<const Rational>(mixed.data(), n + 1), n) == weighted,
                 [&] { return fmt("rational weights, n = %zu", n); });
  }
  r.checks.push_back(brute.check());
  return r;
}

CriterionResult asymptotics(Scale) {
  CriterionResult r{3, "asymptotic counts", {}, 0.0};
  const std::vector<MembershipSet> sets{MembershipSet::all(), MembershipSet::finite({2}), MembershipSet::even()};
  for (const auto& set : sets) {
    auto ratio = [&](std::size_t n) {
      return std::exp(log_big(count_constrained(set, n)) - log_asymptotic_count(set, n));
    };
    const double r50 = ratio(50);
    const double r200 = ratio(200);
    r.checks.push_back({"set " + set.name() + ": |ratio - 1| < 0.05 at n = 200", std::abs(r200 - 1.0) < 0.05,
                        fmt("ratio %.6f", r200)});
    r.checks.push_back({"set " + set.name() + ": ratio error decreases from n = 50 to 200",
                        std::abs(r200 - 1.0) < std::abs(r50 - 1.0), fmt("ratio(50) %.6f, ratio(200) %.6f", r50, r200)});
  }
  return r;
}

CriterionResult sampler_exactness(Scale scale) {
  CriterionResult r{4, "sampler exactness", {}, 0.0};
  const std::size_t samples = scale == Scale::Full ? 200000 : 20000;
  struct Case {
    MembershipSet set;
    std::size_t n;
  };
  const std::vector<Case> cases{{MembershipSet::all(), 6},
                                {MembershipSet::finite({2}), 8},
                                {MembershipSet::even(), 8},
                                {MembershipSet::odd(), 7}};
  std::uint64_t seed = 4000;
  for (const auto& c : cases) {
    const WeightSeq w = WeightSeq::membership(c.set);
    const ExactLaw exact = exact_partition_law(w, c.n);
    const TiltedLaw law = equivalent_distribution(w);
    for (SamplerMethod method : {SamplerMethod::DpTable, SamplerMethod::Rejection}) {
      const PartitionSampler sampler(law, c.n, method);
      Rng rng(++seed);
      std::vector<std::size_t> counts(exact.partitions.size(), 0);
      bool outside = false;
      for (std::size_t i = 0; i < samples; ++i) {
        const auto it = exact.index.find(sampler.sample(rng).blocks());
        if (it == exact.index.end()) {
          outside = true;
          break;
        }
        ++counts[it->second];
      }
      const double p = outside ? 0.0 : chi_square_pvalue(counts, exact.probabilities);
      r.checks.push_back({fmt("set %s, n = %zu, %s: chi-square p > 1e-3", c.set.name().c_str(), c.n,
                              std::string(to_string(method)).c_str()),
                          p > 1e-3,
                          outside ? std::string("sampled a partition outside the support")
                                  : fmt("%zu cells, %zu samples, p = %.4g", exact.partitions.size(), samples, p)});
    }
  }
  return r;
}

CriterionResult block_limits(Scale scale) {
  CriterionResult r{5, "block-size limits", {}, 0.0};
  const std::size_t n = scale == Scale::Full ? 2000 : 1000;
  const std::size_t replicas = scale == Scale::Full ? 50000 : 20000;
  struct Family {
    MembershipSet set;
    double tol;
  };
  const std::vector<Family> families{{MembershipSet::all(), 0.01},
                                     {MembershipSet::multiples(5), 0.015},
                                     {MembershipSet::odd(), 0.015}};
  std::uint64_t seed = 5000;
  for (const auto& f : families) {
    const TiltedLaw law = equivalent_distribution(WeightSeq::membership(f.set));
    std::set<std::size_t> ks{1, 2, 3, 4, 5};
    for (std::size_t k : f.set.members_up_to(200)) {
      if (ks.size() >= 10) break;
      ks.insert(k);
    }
    SuiteOptions opts;
    opts.max_k = *ks.rbegin();
    const EmpiricalReport rep = empirical_suite({law, n, ++seed, SamplerMethod::Auto}, {MembershipSet::all()}, replicas, opts);
    double worst_s1 = 0.0;
    double worst_typ = 0.0;
    std::string where_s1;
    std::string where_typ;
    for (std::size_t k : ks) {
      const auto& a = rep.row("s1_law", std::to_string(k));
      const auto& b = rep.row("typical_block", std::to_string(k));
      if (std::abs(a.observed - a.predicted) >= worst_s1) {
        worst_s1 = std::abs(a.observed - a.predicted);
        where_s1 = fmt("k = %zu: %.4f vs %.4f", k, a.observed, a.predicted);
      }
      if (std::abs(b.observed - b.predicted) >= worst_typ) {
        worst_typ = std::abs(b.observed - b.predicted);
        where_typ = fmt("k = %zu: %.4f vs %.4f", k, b.observed, b.predicted);
      }
    }
    std::string klist;
    for (std::size_t k : ks) klist += (klist.empty() ? "" : ",") + std::to_string(k);
    const std::string tag = fmt("set %s, n = %zu, %zu replicas: ", f.set.name().c_str(), n, replicas);
    r.checks.push_back({tag + "root block law, k in {" + klist + "}", worst_s1 < f.tol,
                        fmt("worst |diff| %.4f (tol %.3f) at ", worst_s1, f.tol) + where_s1});
    r.checks.push_back({tag + "typical block law, k in {" + klist + "}", worst_typ < f.tol,
                        fmt("worst |diff| %.4f (tol %.3f) at ", worst_typ, f.tol) + where_typ});
    const auto& z = rep.row("zeta_mean", MembershipSet::all().name());
    Check c = within(tag + "mean block count / n", z.observed, z.predicted, f.tol);
    r.checks.push_back(c);
  }
  return r;
}

CriterionResult clt(Scale scale) {
  CriterionResult r{6, "block-count CLT", {}, 0.0};
  const std::size_t n = scale == Scale::Full ? 10000 : 2000;
  const std::size_t replicas = scale == Scale::Full ? 20000 : 4000;

  const TiltedLaw uniform = equivalent_distribution(WeightSeq::membership(MembershipSet::all()));
  const MembershipSet one = MembershipSet::finite({1});
  const EmpiricalReport rep = empirical_suite({uniform, n, 6001, SamplerMethod::Auto}, {one}, replicas);
  const auto& v = rep.row("zeta_variance", one.name());
  const auto& vp = rep.row("zeta_variance_printed", one.name());
  const double rel = std::abs(v.observed - v.predicted) / v.predicted;
  r.checks.push_back({fmt("set N, A = {1}, n = %zu, %zu replicas: variance within 10%% of formula", n, replicas),
                      rel < 0.10,
                      fmt("observed %.5f, formula %.5f, relative error %.3f; printed formula %.5f", v.observed,
                          v.predicted, rel, vp.predicted)});

  const TiltedLaw pairs = equivalent_distribution(WeightSeq::membership(MembershipSet::finite({2})));
  const MembershipSet two = MembershipSet::finite({2});
  const std::size_t dn = scale == Scale::Full ? 10000 : 2000;
  const EmpiricalReport deg = empirical_suite({pairs, dn, 6002, SamplerMethod::Auto}, {two}, 2000);
  const auto& d = deg.row("zeta_variance", two.name());
  const auto& dp = deg.row("zeta_variance_printed", two.name());
  r.checks.push_back({"set {2}, A = {2}: empirical variance < 1e-12", d.observed < 1e-12,
                      fmt("observed %.3g, formula %.3g", d.observed, d.predicted)});
  r.checks.push_back({"set {2}, A = {2}: formula predicts 0", std::abs(d.predicted) < 1e-12,
                      fmt("formula %.3g", d.predicted)});
  r.checks.push_back({"set {2}, A = {2}: printed formula is negative and misses the observation",
                      dp.predicted < 0.0 && std::abs(dp.predicted + 0.25) < 1e-12 &&
                          std::abs(dp.predicted - d.observed) > 0.2,
                      fmt("printed %.6f vs observed %.3g", dp.predicted, d.observed)});
  return r;
}

CriterionResult support(Scale) {
  CriterionResult r{7, "support solver", {}, 0.0};
  struct Case {
    std::string preset;
    double target;
    double tol;
  };
  const std::vector<Case> cases{{"semicircle", 2.0, 1e-9},
                                {"free-poisson:1", 4.0, 1e-9},
                                {"ortmann-uniform", 4.16, 0.01},
                                {"levy-area", 3.94, 0.01},
                                {"beta-tail:2,0.5", 1.25, 1e-9}};
  for (const auto& c : cases) {
    const CumulantSeq kappa = CumulantSeq::preset(c.preset);
    const SupportResult s = support_max(kappa);
    r.checks.push_back(within(c.preset + ": s_max", s.s_max, c.target, c.tol));
    if (s.branch == SupportBranch::NuGe1) {
      const TiltedLaw law = equivalent_distribution(kappa.weights());
      r.checks.push_back(within(c.preset + ": s_max = Phi(xi)/xi", s.s_max, law.phi_at_xi() / law.xi(), 1e-10));
    } else {
      const double rho = s.rho.value();
      const double phi = kappa.weights().moments(rho).m0;
      r.checks.push_back(within(c.preset + ": s_max = Phi(rho)/rho", s.s_max, phi / rho, 1e-10));
    }
  }
  const SupportResult beta = support_max(CumulantSeq::preset("beta-tail:2,0.5"));
  r.checks.push_back({"beta-tail:2,0.5: branch nu_lt_1", beta.branch == SupportBranch::NuLt1,
                      std::string(to_string(beta.branch))});
  r.checks.push_back(within("beta-tail:2,0.5: nu", beta.nu.is_finite() ? beta.nu.value() : INFINITY, 0.6, 1e-9));
  return r;
}

CriterionResult moment_growth(Scale) {
  CriterionResult r{8, "moment growth", {}, 0.0};
  std::vector<Rational> kappa{0, 1};
  const std::vector<Rational> m = moments_from_cumulants(kappa, 128);
  std::vector<double> roots;
  std::string text;
  for (std::size_t big_n : {8, 16, 32, 64}) {
    const double root = std::exp(log_big(numerator(m[2 * big_n - 1])) / static_cast<double>(2 * big_n));
    roots.push_back(root);
    text += fmt("%sN=%zu: %.6f", text.empty() ? "" : ", ", big_n, root);
  }
  bool increasing = true;
  for (std::size_t i = 1; i < roots.size(); ++i) increasing = increasing && roots[i] > roots[i - 1];
  r.checks.push_back({"(m_2N)^(1/2N) increasing in N", increasing, text});
  r.checks.push_back({"(m_128)^(1/128) in (1.90, 2.00)", roots.back() > 1.90 && roots.back() < 2.00,
                      fmt("value %.6f; m_2N = Catalan(N) gives 4^N N^(-3/2)/sqrt(pi), so the root exceeds 1.90 only from N ~ 67",
                          roots.back())});
  return r;
}

CriterionResult longest_chords(Scale scale) {
  CriterionResult r{9, "longest chord", {}, 0.0};
  const std::size_t n = scale == Scale::Full ? 5000 : 2000;
  const std::size_t replicas = 2000;
  const std::vector<MembershipSet> sets{MembershipSet::all(), MembershipSet::odd(), MembershipSet::multiples(5)};
  std::vector<std::vector<double>> samples;
  std::uint64_t seed = 9000;
  for (const auto& set : sets) {
    const PartitionSampler sampler(equivalent_distribution(WeightSeq::membership(set)), n);
    std::vector<double> c(replicas);
    const std::uint64_t s = ++seed;
    const std::size_t threads = std::min(worker_threads(), replicas);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < replicas; i += threads) {
          Rng rng(s, i);
          c[i] = longest_chord(sampler.sample(rng));
        }
      });
    }
    for (auto& th : pool) th.join();
    const double ks = ks_distance(c, limit_chord_cdf);
    const auto [lo, hi] = std::minmax_element(c.begin(), c.end());
    const std::string tag = fmt("set %s, n = %zu, %zu replicas: ", set.name().c_str(), n, replicas);
    r.checks.push_back({tag + "KS to limit law < 0.05", ks < 0.05, fmt("KS %.4f", ks)});
    r.checks.push_back({tag + "min >= 1/3 - 0.02 and max <= 1/2", *lo >= 1.0 / 3.0 - 0.02 && *hi <= 0.5,
                        fmt("min %.4f, max %.4f", *lo, *hi)});
    samples.push_back(std::move(c));
  }
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      const double ks = ks_two_sample(samples[a], samples[b]);
      r.checks.push_back({"two-sample KS " + sets[a].name() + " vs " + sets[b].name() + " < 0.05", ks < 0.05,
                          fmt("KS %.4f", ks)});
    }
  }
  Tally cdf{"limit_chord_cdf agrees with a trapezoid integration to 1e-6"};
  for (double x = 0.335; x < 0.5; x += 0.005) {
    cdf.expect(std::abs(limit_chord_cdf(x) - trapezoid_chord_cdf(x, 200000)) < 1e-6,
               [&] { return fmt("x = %.3f", x); });
  }
  r.checks.push_back(cdf.check());
  return r;
}

CriterionResult rendering(Scale) {
  CriterionResult r{10, "rendering determinism", {}, 0.0};
  const NCPartition example =
      validate_partition({{1, 3, 5}, {2}, {4}, {6, 7, 11, 12}, {8}, {9, 10}}, 12);
  RenderOptions opts;
  opts.fill_hulls = true;
  opts.shade_by_area = true;
  const std::string a = render_svg(example, opts);
  const std::string b = render_svg(example, opts);
  r.checks.push_back({"running example renders byte-identically", a == b && !a.empty(), fmt("%zu bytes", a.size())});

  const TiltedLaw law = equivalent_distribution(WeightSeq::membership(MembershipSet::all()));
  const NCPartition p1 = sample_partition({law, 200, 10, SamplerMethod::Auto});
  const NCPartition p2 = sample_partition({law, 200, 10, SamplerMethod::Auto});
  const std::string c = render_svg(p1, opts);
  const std::string d = render_svg(p2, opts);
  r.checks.push_back({"n = 200 sample with seed 10 renders byte-identically", p1 == p2 && c == d,
                      fmt("%zu bytes, %zu blocks", c.size(), p1.block_count())});
  return r;
}

}  // namespace

bool CriterionResult::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CriterionResult run_criterion(int id, Scale scale) {
  static const std::vector<std::pair<std::string, CriterionResult (*)(Scale)>> table{
      {"bijection round-trips", bijections}, {"exact counts", exact_counts},
      {"asymptotic counts", asymptotics},   {"sampler exactness", sampler_exactness},
      {"block-size limits", block_limits},  {"block-count CLT", clt},
      {"support solver", support},          {"moment growth", moment_growth},
      {"longest chord", longest_chords},    {"rendering determinism", rendering}};
  if (id < 1 || id > kCriterionCount) throw Error(ErrorKind::InvalidArgument, "no criterion " + std::to_string(id));
  const auto& [title, fn] = table[static_cast<std::size_t>(id - 1)];
  const auto start = std::chrono::steady_clock::now();
  CriterionResult result{id, title, {}, 0.0};
  try {
    result = fn(scale);
  } catch (const std::exception& e) {
    result.checks.push_back({"completed without error", false, e.what()});
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void print_result(std::ostream& out, const CriterionResult& r, bool verbose) {
  out << (r.pass() ? "PASS " : "FAIL ") << r.id << ' ' << r.title << fmt(" (%.1f s)", r.seconds) << '\n';
  if (!verbose) return;
  for (const Check& c : r.checks) {
    out << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
}

bool run_all(std::ostream& out, Scale scale, bool verbose) {
  bool all = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const CriterionResult r = run_criterion(id, scale);
    print_result(out, r, verbose);
    out.flush();
    all = all && r.pass();
  }
  return all;
}

}  // namespace ncpart::verify
