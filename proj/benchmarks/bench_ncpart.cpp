#include <benchmark/benchmark.h>

#include "ncpart/bijections.hpp"
#include "ncpart/freeprob.hpp"
#include "ncpart/geometry.hpp"
#include "ncpart/sampler.hpp"
#include "ncpart/series.hpp"
#include "ncpart/stats.hpp"

using namespace ncpart;

namespace {

const TiltedLaw& uniform_law() {
  static const TiltedLaw law = equivalent_distribution(WeightSeq::membership(MembershipSet::all()));
  return law;
}

NCPartition sample_of(std::size_t n) {
  return sample_partition({uniform_law(), n, 1, SamplerMethod::Auto});
}

void BM_SampleRejection(benchmark::State& state) {
  const PartitionSampler s(uniform_law(), static_cast<std::size_t>(state.range(0)), SamplerMethod::Rejection);
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(s.sample(rng));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleRejection)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

void BM_SampleDpTable(benchmark::State& state) {
  const PartitionSampler s(uniform_law(), static_cast<std::size_t>(state.range(0)), SamplerMethod::DpTable);
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(s.sample(rng));
}
BENCHMARK(BM_SampleDpTable)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

void BM_DpTableSetup(benchmark::State& state) {
  for (auto _ : state) {
    PartitionSampler s(uniform_law(), static_cast<std::size_t>(state.range(0)), SamplerMethod::DpTable);
    benchmark::DoNotOptimize(&s);
  }
}
BENCHMARK(BM_DpTableSetup)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_TreeRoundTrip(benchmark::State& state) {
  const NCPartition p = sample_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(p_circ(t_circ(p)));
}
BENCHMARK(BM_TreeRoundTrip)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_Kreweras(benchmark::State& state) {
  const NCPartition p = sample_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kreweras(p));
}
BENCHMARK(BM_Kreweras)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_CountConstrained(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_constrained(MembershipSet::odd(), static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_CountConstrained)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_SemicircleMoments(benchmark::State& state) {
  const std::vector<Rational> kappa{0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(moments_from_cumulants(kappa, 128));
}
BENCHMARK(BM_SemicircleMoments)->Unit(benchmark::kMillisecond);

void BM_SupportMax(benchmark::State& state) {
  const CumulantSeq k = CumulantSeq::preset("levy-area");
  for (auto _ : state) benchmark::DoNotOptimize(support_max(k));
}
BENCHMARK(BM_SupportMax)->Unit(benchmark::kMicrosecond);

void BM_LongestChord(benchmark::State& state) {
  const NCPartition p = sample_of(5000);
  for (auto _ : state) benchmark::DoNotOptimize(longest_chord(p));
}
BENCHMARK(BM_LongestChord)->Unit(benchmark::kMicrosecond);

void BM_RenderSvg(benchmark::State& state) {
  const NCPartition p = sample_of(1000);
  RenderOptions o;
  o.fill_hulls = true;
  o.shade_by_area = true;
  for (auto _ : state) benchmark::DoNotOptimize(render_svg(p, o));
}
BENCHMARK(BM_RenderSvg)->Unit(benchmark::kMicrosecond);

void BM_EmpiricalSuite(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        empirical_suite({uniform_law(), 2000, 1, SamplerMethod::Auto}, {MembershipSet::finite({1})}, 100));
  }
}
BENCHMARK(BM_EmpiricalSuite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
