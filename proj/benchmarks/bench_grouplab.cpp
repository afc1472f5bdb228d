#include <benchmark/benchmark.h>

#include <random>

#include "grouplab/automorphisms.hpp"
#include "grouplab/characters.hpp"
#include "grouplab/ff_lacunary.hpp"
#include "grouplab/group_spec.hpp"
#include "grouplab/power_maps.hpp"
#include "grouplab/psl2_aut.hpp"
#include "grouplab/subgroups.hpp"
#include "grouplab/wreath_socle.hpp"

using namespace grouplab;

namespace {

void BM_ParseGroup(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_group("S5"));
}
BENCHMARK(BM_ParseGroup)->Unit(benchmark::kMillisecond);

void BM_ConjugacyClasses(benchmark::State &state) {
  const auto g = parse_group("S3xA5");
  for (auto _ : state)
    benchmark::DoNotOptimize(conjugacy_classes(g));
}
BENCHMARK(BM_ConjugacyClasses)->Unit(benchmark::kMillisecond);

void BM_AutomorphismGroup(benchmark::State &state) {
  const auto g = parse_group(state.range(0) == 0 ? "A5" : "PGL(2,7)");
  for (auto _ : state)
    benchmark::DoNotOptimize(automorphism_group(g));
}
BENCHMARK(BM_AutomorphismGroup)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_LValue(benchmark::State &state) {
  const auto g = parse_group("S5");
  const auto aut = automorphism_group(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(l_value(g, aut, state.range(0)));
}
BENCHMARK(BM_LValue)->Arg(-1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CharacterTable(benchmark::State &state) {
  const auto g = parse_group(state.range(0) == 0 ? "S5" : "PSL(2,11)");
  for (auto _ : state)
    benchmark::DoNotOptimize(character_table(g));
}
BENCHMARK(BM_CharacterTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GammaL2Mul(benchmark::State &state) {
  GammaL2 g(static_cast<std::uint32_t>(state.range(0)));
  std::mt19937_64 rng(1);
  auto x = g.random(rng);
  const auto y = g.random(rng);
  for (auto _ : state) {
    x = g.mul(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_GammaL2Mul)->Arg(9)->Arg(64)->Arg(512);

void BM_CountGoodFiltered(benchmark::State &state) {
  GammaL2 g(static_cast<std::uint32_t>(state.range(0)));
  std::mt19937_64 rng(2);
  const auto a = g.random(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(count_good_filtered(g, a));
}
BENCHMARK(BM_CountGoodFiltered)->Arg(9)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_L3InnerMax(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(l3_inner_max(static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_L3InnerMax)->Arg(8)->Arg(9)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_LacunaryReduce(benchmark::State &state) {
  auto field = FqField::of_order(256);
  std::mt19937_64 rng(3);
  const auto f = random_lacunary(field, 6, 0.2, rng);
  for (auto _ : state) {
    const auto q = lacunary_reduce(f, 6, 0.2);
    benchmark::DoNotOptimize(roots(q));
  }
}
BENCHMARK(BM_LacunaryReduce)->Unit(benchmark::kMicrosecond);

void BM_OpportuneFamily(benchmark::State &state) {
  std::mt19937_64 rng(4);
  const auto n = static_cast<unsigned>(state.range(0));
  const auto sa = random_perm(n, rng), sb = random_perm(n, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(opportune_family(sa, sb));
}
BENCHMARK(BM_OpportuneFamily)->Arg(256)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_NcycleInversion(benchmark::State &state) {
  const auto s4 = parse_group("S4");
  std::vector<Automorphism> alphas;
  for (Element x : {1u, 5u, 9u})
    alphas.push_back(Automorphism::inner(s4, x));
  for (auto _ : state)
    benchmark::DoNotOptimize(ncycle_inversion_count(s4, alphas));
}
BENCHMARK(BM_NcycleInversion)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
