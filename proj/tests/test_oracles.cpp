#include <gtest/gtest.h>

#include <cmath>

#include "ncpart/verify/acceptance.hpp"
#include "ncpart/verify/oracles.hpp"

using namespace ncpart;
using namespace ncpart::verify;

TEST(Oracles, SetPartitionsAreBellMany) {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 1; n < 8; ++n) EXPECT_EQ(all_set_partitions(n).size(), bell[n]);
}

TEST(Oracles, QuadrupleTest) {
  EXPECT_FALSE(noncrossing_by_quadruples({{1, 3}, {2, 4}}, 4));
  EXPECT_TRUE(noncrossing_by_quadruples({{1, 4}, {2, 3}}, 4));
  std::size_t nc = 0;
  for (const auto& b : all_set_partitions(7)) nc += noncrossing_by_quadruples(b, 7);
  EXPECT_EQ(nc, 429u);
}

TEST(Oracles, ChiSquare) {
  EXPECT_GT(chi_square_pvalue({50, 50}, {0.5, 0.5}), 0.99);
  EXPECT_LT(chi_square_pvalue({90, 10}, {0.5, 0.5}), 1e-10);
  EXPECT_EQ(chi_square_pvalue({1, 9}, {0.0, 1.0}), 0.0);
}

TEST(Oracles, Kolmogorov) {
  std::vector<double> u;
  for (int i = 0; i < 1000; ++i) u.push_back((i + 0.5) / 1000.0);
  EXPECT_NEAR(ks_distance(u, [](double x) { return x; }), 0.0005, 1e-12);
  EXPECT_NEAR(ks_two_sample(u, u), 0.0, 1e-15);
  std::vector<double> shifted;
  for (double x : u) shifted.push_back(x + 0.1);
  EXPECT_NEAR(ks_two_sample(u, shifted), 0.1, 2e-3);
}

TEST(Oracles, TrapezoidCdfIsNormalised) {
  EXPECT_NEAR(trapezoid_chord_cdf(0.5 - 1e-12, 400000), 1.0, 1e-4);
  EXPECT_EQ(trapezoid_chord_cdf(0.3, 10), 0.0);
}

TEST(Acceptance, FastCriteriaPass) {
  for (int id : {2, 3, 7, 10}) {
    const CriterionResult r = run_criterion(id, Scale::Reduced);
    EXPECT_TRUE(r.pass()) << id;
  }
}

TEST(Acceptance, MomentGrowthShortfallIsReported) {
  const CriterionResult r = run_criterion(8, Scale::Reduced);
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_TRUE(r.checks[0].pass);
  EXPECT_FALSE(r.checks[1].pass);
}

TEST(Acceptance, UnknownCriterion) { EXPECT_THROW(run_criterion(11, Scale::Reduced), std::exception); }
