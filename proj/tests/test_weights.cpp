#include <gtest/gtest.h>

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>

#include "ncpart/error.hpp"
#include "ncpart/membership.hpp"
#include "ncpart/weights.hpp"

using namespace ncpart;

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  boost::math::tools::eps_tolerance<double> tol(52);
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::bisect(f, lo, hi, tol, iters);
  return 0.5 * (r.first + r.second);
}

}  // namespace

TEST(Membership, Parse) {
  EXPECT_EQ(MembershipSet::parse("all"), MembershipSet::all());
  EXPECT_EQ(MembershipSet::parse("odd"), MembershipSet::odd());
  EXPECT_EQ(MembershipSet::parse("even"), MembershipSet::multiples(2));
  EXPECT_EQ(MembershipSet::parse("divisible:5"), MembershipSet::multiples(5));
  EXPECT_EQ(MembershipSet::parse("set:2,4"), MembershipSet::finite({2, 4}));
  EXPECT_EQ(MembershipSet::parse("3"), MembershipSet::finite({3}));
  EXPECT_THROW(MembershipSet::parse("bogus"), Error);
  EXPECT_THROW(MembershipSet::parse("multiples:0"), Error);
  EXPECT_THROW(MembershipSet::parse("set:0"), Error);
}

TEST(Membership, Queries) {
  EXPECT_TRUE(MembershipSet::prime().contains(7));
  EXPECT_FALSE(MembershipSet::prime().contains(9));
  EXPECT_FALSE(MembershipSet::prime().contains(1));
  EXPECT_EQ(MembershipSet::prime().gcd(), 1u);
  EXPECT_EQ(MembershipSet::multiples(5).gcd(), 5u);
  EXPECT_EQ(MembershipSet::finite({4, 6}).gcd(), 2u);
  EXPECT_EQ(MembershipSet::odd().gcd(), 1u);
  EXPECT_EQ(MembershipSet::odd().members_up_to(7), (std::vector<std::size_t>{1, 3, 5, 7}));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(91));
}

TEST(WeightSeq, DegenerateSets) {
  EXPECT_THROW(WeightSeq::membership(MembershipSet::finite({})), Error);
  EXPECT_THROW(WeightSeq::membership(MembershipSet::finite({1})), Error);
  EXPECT_THROW(WeightSeq::explicit_values({0.0, 1.0}), Error);
  EXPECT_THROW(WeightSeq::explicit_values({1.0, -1.0, 1.0}), Error);
}

TEST(TiltedLaw, UniformPartitions) {
  const TiltedLaw law = equivalent_distribution(WeightSeq::membership(MembershipSet::all()));
  EXPECT_NEAR(law.xi(), 0.5, 1e-12);
  EXPECT_TRUE(law.rho().is_finite());
  EXPECT_DOUBLE_EQ(law.rho().value(), 1.0);
  EXPECT_TRUE(law.nu().is_infinite());
  for (std::size_t k = 0; k < 30; ++k) EXPECT_NEAR(law.pi(k), std::ldexp(1.0, -static_cast<int>(k) - 1), 1e-14);
  EXPECT_NEAR(law.mean(), 1.0, 1e-12);
  EXPECT_NEAR(law.variance().value(), 2.0, 1e-9);
  EXPECT_TRUE(law.critical());
  EXPECT_NEAR(law.tail_above(3), 1.0 / 16.0, 1e-12);
}

TEST(TiltedLaw, MultiplesOfN) {
  for (std::size_t m : {2, 3, 5}) {
    const TiltedLaw law = equivalent_distribution(WeightSeq::membership(MembershipSet::multiples(m)));
    const double md = static_cast<double>(m);
    for (std::size_t k = 0; k <= 6 * m; ++k) {
      const double expected = k % m == 0 ? md / std::pow(1.0 + md, 1.0 + static_cast<double>(k) / md) : 0.0;
      EXPECT_NEAR(law.pi(k), expected, 1e-12) << "m = " << m << ", k = " << k;
    }
  }
}

TEST(TiltedLaw, Pairs) {
  const TiltedLaw law = equivalent_distribution(WeightSeq::membership(MembershipSet::finite({2})));
  EXPECT_NEAR(law.xi(), 1.0, 1e-12);
  EXPECT_NEAR(law.pi(0), 0.5, 1e-12);
  EXPECT_NEAR(law.pi(2), 0.5, 1e-12);
  EXPECT_NEAR(law.variance().value(), 1.0, 1e-12);
  EXPECT_TRUE(law.rho().is_infinite());
}

TEST(TiltedLaw, OddSizes) {
  const double z = bisect([](double t) { return 1 - 2 * t * t - 2 * t * t * t + t * t * t * t; }, 0.0, 1.0);
  const TiltedLaw law = equivalent_distribution(WeightSeq::membership(MembershipSet::odd()));
  const double c = (1 - z * z) / (1 + z - z * z);
  for (std::size_t k = 0; k < 25; ++k) {
    const double expected = (k == 0 || k % 2 == 1) ? c * std::pow(z, static_cast<double>(k)) : 0.0;
    EXPECT_NEAR(law.pi(k), expected, 1e-12) << k;
  }
  EXPECT_NEAR(xi_for_set(MembershipSet::odd()).first, law.xi(), 1e-10);
}

TEST(TiltedLaw, ThreeEqual) {
  const auto [xi, law] = xi_for_set(MembershipSet::finite({3}));
  EXPECT_NEAR(xi, std::cbrt(0.5), 1e-12);
  EXPECT_NEAR(law.pi(3), 1.0 / 3.0, 1e-12);
}

TEST(TiltedLaw, TiltInvariance) {
  const WeightSeq w = WeightSeq::explicit_values({1.0, 0.3, 2.0, 0.0, 1.5, 0.25});
  const TiltedLaw a = equivalent_distribution(w);
  const TiltedLaw b = equivalent_distribution(w.tilted(4.0, 0.6));
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_NEAR(a.pi(k), b.pi(k), 1e-12) << k;
  double sum = 0.0;
  double mean = 0.0;
  for (std::size_t k = 0; k <= 5; ++k) {
    sum += a.pi(k);
    mean += static_cast<double>(k) * a.pi(k);
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_NEAR(mean, 1.0, 1e-10);
}

TEST(TiltedLaw, SetsAgreeWithDirectSolve) {
  for (const auto& set : {MembershipSet::all(), MembershipSet::prime(), MembershipSet::multiples(5),
                          MembershipSet::finite({2, 3}), MembershipSet::even()}) {
    const auto [xi, direct] = xi_for_set(set);
    const TiltedLaw law = equivalent_distribution(WeightSeq::membership(set));
    EXPECT_NEAR(law.xi(), xi, 1e-10) << set.name();
    EXPECT_NEAR(law.mean(), 1.0, 1e-10) << set.name();
  }
}

TEST(TiltedLaw, RhoZero) {
  FormulaWeights f;
  f.name = "factorial";
  f.w = [](std::size_t k) { return std::tgamma(static_cast<double>(k) + 1.0); };
  f.rho = 0.0;
  const WeightSeq w = WeightSeq::formula(f);
  try {
    equivalent_distribution(w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RhoZero);
  }
}

TEST(TiltedLaw, Subcritical) {
  // w(k) = k^-3: rho = 1 and nu = zeta(2) / (1 + zeta(3)) < 1.
  const double zeta3 = 1.2020569031595942;
  FormulaWeights f;
  f.name = "cubic";
  f.w = [](std::size_t k) { return k == 0 ? 1.0 : std::pow(static_cast<double>(k), -3.0); };
  f.rho = 1.0;
  f.phi_at_rho = 1.0 + zeta3;
  f.dphi_at_rho = std::numbers::pi * std::numbers::pi / 6.0;
  const TiltedLaw law = equivalent_distribution(WeightSeq::formula(f));
  const double nu = *f.dphi_at_rho / *f.phi_at_rho;
  EXPECT_NEAR(law.nu().value(), nu, 1e-12);
  EXPECT_NEAR(law.xi(), 1.0, 1e-12);
  EXPECT_NEAR(law.mean(), nu, 1e-12);
  EXPECT_FALSE(law.critical());
  EXPECT_NEAR(law.pi(2), 0.125 / (1.0 + zeta3), 1e-12);
}

TEST(WeightSeq, MomentsAndPsi) {
  const WeightSeq w = WeightSeq::membership(MembershipSet::all());
  const PowerMoments m = w.moments(0.25);
  EXPECT_NEAR(m.m0, 1.0 / 0.75, 1e-12);
  EXPECT_NEAR(m.m1, 0.25 / (0.75 * 0.75), 1e-12);
  EXPECT_NEAR(w.psi(0.5), 1.0, 1e-12);
  EXPECT_EQ(w.support_gcd(), 1u);
  EXPECT_FALSE(w.finite_support());
}
