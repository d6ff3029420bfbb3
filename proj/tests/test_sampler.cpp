#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "ncpart/error.hpp"
#include "ncpart/sampler.hpp"
#include "ncpart/verify/oracles.hpp"

using namespace ncpart;

namespace {

TiltedLaw law_of(const MembershipSet& set) { return equivalent_distribution(WeightSeq::membership(set)); }

std::vector<std::int64_t> values(const LukaWalk& w) { return {w.values().begin(), w.values().end()}; }

}  // namespace

TEST(Rng, StreamsDifferAndRepeat) {
  Rng a(1, 0);
  Rng b(1, 0);
  Rng c(1, 1);
  Rng d(2, 0);
  const auto x = a();
  EXPECT_EQ(x, b());
  EXPECT_NE(x, c());
  EXPECT_NE(x, d());
  Rng e(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = e.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(e.below(7), 7u);
  }
}

TEST(CycleShift, Examples) {
  EXPECT_EQ(values(cycle_shift({0, 2, 0})), (std::vector<std::int64_t>{0, 1, 0, -1}));
  EXPECT_EQ(values(cycle_shift({0})), (std::vector<std::int64_t>{0, -1}));
  const std::vector<std::size_t> valid{3, 1, 0, 1, 0, 4, 0, 1, 2, 0, 0, 0, 0};
  EXPECT_EQ(tree_from_walk(cycle_shift(valid)), make_tree(valid));
  EXPECT_THROW(cycle_shift({1, 1}), Error);
}

TEST(CycleShift, EveryRotationGivesTheSameTree) {
  const std::vector<std::size_t> d{2, 0, 3, 0, 1, 0, 0};
  const PlaneTree base = tree_from_walk(cycle_shift(d));
  for (std::size_t r = 0; r < d.size(); ++r) {
    std::vector<std::size_t> rot(d.begin() + static_cast<std::ptrdiff_t>(r), d.end());
    rot.insert(rot.end(), d.begin(), d.begin() + static_cast<std::ptrdiff_t>(r));
    EXPECT_EQ(tree_from_walk(cycle_shift(rot)), base) << r;
  }
}

TEST(Sampler, PairsAtTwo) {
  for (SamplerMethod m : {SamplerMethod::DpTable, SamplerMethod::Rejection}) {
    const PartitionSampler s(law_of(MembershipSet::finite({2})), 2, m);
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      auto d = s.sample_degrees(rng);
      std::sort(d.begin(), d.end());
      ASSERT_EQ(d, (std::vector<std::size_t>{0, 0, 2}));
    }
  }
}

TEST(Sampler, DegreeMultisetLawAtThree) {
  for (SamplerMethod m : {SamplerMethod::DpTable, SamplerMethod::Rejection}) {
    const PartitionSampler s(law_of(MembershipSet::all()), 3, m);
    Rng rng(11);
    std::map<std::vector<std::size_t>, double> freq;
    const int total = 200000;
    for (int i = 0; i < total; ++i) {
      auto d = s.sample_degrees(rng);
      std::sort(d.rbegin(), d.rend());
      freq[d] += 1.0 / total;
    }
    EXPECT_NEAR((freq[{3, 0, 0, 0}]), 0.2, 0.006);
    EXPECT_NEAR((freq[{2, 1, 0, 0}]), 0.6, 0.006);
    EXPECT_NEAR((freq[{1, 1, 1, 0}]), 0.2, 0.006);
  }
}

TEST(Sampler, UniformAtThree) {
  for (SamplerMethod m : {SamplerMethod::DpTable, SamplerMethod::Rejection}) {
    const PartitionSampler s(law_of(MembershipSet::all()), 3, m);
    Rng rng(12);
    std::map<std::vector<Block>, double> freq;
    const int total = 1000000;
    for (int i = 0; i < total; ++i) freq[s.sample(rng).blocks()] += 1.0 / total;
    ASSERT_EQ(freq.size(), 5u);
    for (const auto& [blocks, f] : freq) EXPECT_NEAR(f, 0.2, 0.002);
  }
}

TEST(Sampler, PairPartitionsOfFour) {
  const PartitionSampler s(law_of(MembershipSet::finite({2})), 4);
  Rng rng(5);
  std::map<std::vector<Block>, double> freq;
  for (int i = 0; i < 40000; ++i) freq[s.sample(rng).blocks()] += 1.0 / 40000;
  ASSERT_EQ(freq.size(), 2u);
  for (const auto& [blocks, f] : freq) EXPECT_NEAR(f, 0.5, 0.01);
}

TEST(Sampler, ChiSquareAgainstEnumeration) {
  const WeightSeq w = WeightSeq::explicit_values({1.0, 0.5, 2.0, 0.0, 3.0});
  const verify::ExactLaw exact = verify::exact_partition_law(w, 7);
  for (SamplerMethod m : {SamplerMethod::DpTable, SamplerMethod::Rejection}) {
    const PartitionSampler s(equivalent_distribution(w), 7, m);
    Rng rng(21);
    std::vector<std::size_t> counts(exact.partitions.size(), 0);
    for (int i = 0; i < 50000; ++i) {
      const auto it = exact.index.find(s.sample(rng).blocks());
      ASSERT_NE(it, exact.index.end());
      ++counts[it->second];
    }
    EXPECT_GT(verify::chi_square_pvalue(counts, exact.probabilities), 1e-3);
  }
}

TEST(Sampler, Infeasible) {
  try {
    PartitionSampler(law_of(MembershipSet::finite({3})), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Infeasible);
  }
  EXPECT_FALSE(degree_sequence_feasible(law_of(MembershipSet::multiples(5)), 12));
  EXPECT_TRUE(degree_sequence_feasible(law_of(MembershipSet::multiples(5)), 15));
  EXPECT_TRUE(degree_sequence_feasible(law_of(MembershipSet::finite({3, 5})), 8));
  EXPECT_FALSE(degree_sequence_feasible(law_of(MembershipSet::finite({3, 5})), 7));
}

TEST(Sampler, MethodSelection) {
  EXPECT_EQ(PartitionSampler(law_of(MembershipSet::all()), 100).method(), SamplerMethod::DpTable);
  EXPECT_EQ(PartitionSampler(law_of(MembershipSet::all()), 10000).method(), SamplerMethod::Rejection);
  EXPECT_THROW(PartitionSampler(law_of(MembershipSet::all()), kDpMaxN + 1, SamplerMethod::DpTable), Error);
  EXPECT_EQ(parse_sampler_method("dp_table"), SamplerMethod::DpTable);
  EXPECT_THROW(parse_sampler_method("fast"), Error);
}

TEST(Sampler, Deterministic) {
  const TiltedLaw law = law_of(MembershipSet::odd());
  const SamplerConfig cfg{law, 5001, 42, SamplerMethod::Auto};
  EXPECT_EQ(sample_partition(cfg), sample_partition(cfg));
  const SamplerConfig other{law, 5001, 43, SamplerMethod::Auto};
  EXPECT_NE(sample_partition(cfg), sample_partition(other));
}

TEST(Sampler, LargeSampleIsValid) {
  const PartitionSampler s(law_of(MembershipSet::multiples(5)), 100000);
  Rng rng(8);
  const NCPartition p = s.sample(rng);
  std::vector<Block> copy = p.blocks();
  EXPECT_EQ(validate_partition(copy, 100000), p);
  for (const Block& b : p.blocks()) EXPECT_EQ(b.size() % 5, 0u);
}
