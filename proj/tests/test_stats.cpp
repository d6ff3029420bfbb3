#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ncpart/error.hpp"
#include "ncpart/stats.hpp"
#include "ncpart/verify/oracles.hpp"

using namespace ncpart;

namespace {

TiltedLaw law_of(const MembershipSet& set) { return equivalent_distribution(WeightSeq::membership(set)); }

}  // namespace

TEST(BlockReport, RunningExample) {
  const NCPartition p = validate_partition({{1, 3, 5}, {2}, {4}, {6, 7, 11, 12}, {8}, {9, 10}}, 12);
  const BlockReport r = block_report(p, {MembershipSet::all(), MembershipSet::odd()}, 3);
  EXPECT_EQ(r.s1, 3u);
  EXPECT_EQ(r.histogram[1], 3u);
  EXPECT_EQ(r.histogram[2], 1u);
  EXPECT_EQ(r.histogram[3], 1u);
  EXPECT_EQ(r.histogram[4], 1u);
  EXPECT_EQ(r.zeta[0], 6u);
  EXPECT_EQ(r.zeta[1], 4u);
  EXPECT_EQ(r.block_count(), 6u);
  EXPECT_EQ(r.largest, (std::vector<std::size_t>{4, 3, 2}));
}

TEST(BlockReport, Extremes) {
  const BlockReport one = block_report(single_block(9), {MembershipSet::all()});
  EXPECT_EQ(one.s1, 9u);
  EXPECT_EQ(one.zeta[0], 1u);
  const BlockReport many = block_report(singletons(9), {});
  EXPECT_EQ(many.s1, 1u);
  EXPECT_EQ(many.histogram[1], 9u);
}

TEST(LimitLaws, Uniform) {
  const LimitBlockLaws l(law_of(MembershipSet::all()));
  double total = 0.0;
  for (std::size_t k = 1; k <= 60; ++k) {
    EXPECT_NEAR(l.root(k), static_cast<double>(k) / std::ldexp(1.0, static_cast<int>(k) + 1), 1e-14);
    EXPECT_NEAR(l.typical(k), std::ldexp(1.0, -static_cast<int>(k)), 1e-14);
    total += l.root(k);
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(LimitLaws, Pairs) {
  const LimitBlockLaws l(law_of(MembershipSet::finite({2})));
  EXPECT_NEAR(l.root(2), 1.0, 1e-12);
  EXPECT_NEAR(l.typical(2), 1.0, 1e-12);
}

TEST(LimitLaws, ExactFiniteRootLawApproachesLimit) {
  const WeightSeq w = WeightSeq::membership(MembershipSet::all());
  const LimitBlockLaws l(equivalent_distribution(w));
  const auto small = verify::exact_s1_law(w, 6);
  const auto large = verify::exact_s1_law(w, 12);
  for (std::size_t k = 1; k <= 3; ++k) {
    EXPECT_LT(std::abs(large[k] - l.root(k)), std::abs(small[k] - l.root(k))) << k;
    EXPECT_NEAR(large[k], l.root(k), 0.04) << k;
  }
}

TEST(Clt, Formulas) {
  const TiltedLaw uniform = law_of(MembershipSet::all());
  EXPECT_NEAR(clt_variance(uniform, MembershipSet::finite({1})), 3.0 / 16.0, 1e-12);
  EXPECT_NEAR(clt_variance_printed(uniform, MembershipSet::finite({1})), 3.0 / 16.0, 1e-12);
  const TiltedLaw pairs = law_of(MembershipSet::finite({2}));
  EXPECT_NEAR(clt_variance(pairs, MembershipSet::finite({2})), 0.0, 1e-12);
  EXPECT_NEAR(clt_variance_printed(pairs, MembershipSet::finite({2})), -0.25, 1e-12);
  EXPECT_NEAR(clt_variance(pairs, MembershipSet::finite({1})), 0.0, 1e-12);
  // pi = geometric(1/2): S_{2} = 1/8, sigma^2 = 2, pi({1}) = 1/4, pi({2}) = 1/8.
  EXPECT_NEAR(clt_covariance(uniform, MembershipSet::finite({1}), MembershipSet::finite({2})),
              -1.0 / 32.0, 1e-12);
  EXPECT_NEAR(clt_variance(uniform, MembershipSet::finite({2})), (1.0 / 8) * (7.0 / 8) - (1.0 / 64) / 2, 1e-12);
  EXPECT_THROW(clt_covariance(uniform, MembershipSet::all(), MembershipSet::odd()), Error);
}

TEST(Clt, Errors) {
  FormulaWeights f;
  f.name = "cubic";
  f.w = [](std::size_t k) { return k == 0 ? 1.0 : std::pow(static_cast<double>(k), -3.0); };
  f.rho = 1.0;
  f.phi_at_rho = 1.0 + 1.2020569031595942;
  f.dphi_at_rho = 1.6449340668482264;
  const TiltedLaw sub = equivalent_distribution(WeightSeq::formula(f));
  try {
    clt_variance(sub, MembershipSet::finite({1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCritical);
  }
  // w(0) = zeta(2) - zeta(3) puts nu exactly at 1 while Phi''(1) diverges.
  FormulaWeights g = f;
  const double w0 = 1.6449340668482264 - 1.2020569031595942;
  g.w = [w0](std::size_t k) { return k == 0 ? w0 : std::pow(static_cast<double>(k), -3.0); };
  g.phi_at_rho = w0 + 1.2020569031595942;
  const TiltedLaw heavy = equivalent_distribution(WeightSeq::formula(g));
  EXPECT_TRUE(heavy.critical());
  EXPECT_TRUE(heavy.variance().is_infinite());
  try {
    clt_variance(heavy, MembershipSet::finite({1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfiniteVariance);
  }
}

TEST(Suite, UniformRootLaw) {
  const SamplerConfig cfg{law_of(MembershipSet::all()), 500, 17, SamplerMethod::Auto};
  const EmpiricalReport r = empirical_suite(cfg, {MembershipSet::all(), MembershipSet::finite({1})}, 20000);
  EXPECT_NEAR(r.row("s1_law", "1").observed, 0.25, 0.01);
  EXPECT_NEAR(r.row("typical_block", "1").observed, 0.5, 0.01);
  EXPECT_NEAR(r.row("zeta_mean", "all").observed, 0.5, 0.01);
  EXPECT_NEAR(r.row("zeta_variance", "set:1").observed, 3.0 / 16.0, 0.02);
  EXPECT_THROW(r.row("s1_law", "999"), Error);
}

TEST(Suite, DeterministicAcrossThreadCounts) {
  const SamplerConfig cfg{law_of(MembershipSet::multiples(5)), 500, 3, SamplerMethod::Auto};
  SuiteOptions one;
  one.threads = 1;
  SuiteOptions three;
  three.threads = 3;
  std::ostringstream a;
  std::ostringstream b;
  write_report_csv(a, empirical_suite(cfg, {MembershipSet::all(), MembershipSet::parse("set:5,10")}, 300, one));
  write_report_csv(b, empirical_suite(cfg, {MembershipSet::all(), MembershipSet::parse("set:5,10")}, 300, three));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "statistic,k_or_set,observed,predicted,stderr,n,replicas,seed");
  EXPECT_NE(a.str().find("\"set:5,10\""), std::string::npos);
}

TEST(Suite, MultiplesOfFiveBlockCount) {
  const TiltedLaw law = law_of(MembershipSet::multiples(5));
  const EmpiricalReport r = empirical_suite({law, 2000, 4, SamplerMethod::Auto}, {MembershipSet::all()}, 1000);
  EXPECT_NEAR(r.row("zeta_mean", "all").observed, 1.0 - law.pi(0), 0.005);
}
