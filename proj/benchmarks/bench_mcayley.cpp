#include <benchmark/benchmark.h>

#include "mcayley/aut.hpp"
#include "mcayley/constructions.hpp"
#include "mcayley/presets.hpp"
#include "mcayley/search.hpp"

using namespace mcayley;

namespace {

void BM_AutPreset(benchmark::State& state, const char* spec, int m) {
  const Preset p = preset(parse_group(spec));
  const Digraph g = preset_graph(p, m);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
  state.counters["vertices"] = g.n();
}
BENCHMARK_CAPTURE(BM_AutPreset, C12_m5, "C12", 5);
BENCHMARK_CAPTURE(BM_AutPreset, X27_m3, "X27", 3);
BENCHMARK_CAPTURE(BM_AutPreset, Q8xC4_m3, "Q8*C4", 3);

void BM_AutHypercube(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Digraph g(1 << d);
  for (int v = 0; v < (1 << d); ++v)
    for (int b = 0; b < d; ++b)
      if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order());
}
BENCHMARK(BM_AutHypercube)->DenseRange(4, 7);

void BM_CanonicalForm(benchmark::State& state) {
  const Digraph g = delta_q8(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).certificate);
}
BENCHMARK(BM_CanonicalForm)->Arg(3)->Arg(6)->Arg(12);

void BM_IsMGrr(benchmark::State& state) {
  const FiniteGroup q8 = make_group(GroupDesc::quaternion());
  const Digraph g = delta_q8(5);
  for (auto _ : state) benchmark::DoNotOptimize(is_m_grr(q8, g, 5).holds);
}
BENCHMARK(BM_IsMGrr);

void BM_RegularGraphs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regular_graphs(n, [](const Digraph&) { return true; }));
}
BENCHMARK(BM_RegularGraphs)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_SweepQ8m2(benchmark::State& state) {
  SweepSpec s;
  s.group = GroupDesc::quaternion();
  s.m = 2;
  s.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exists_m_grr_exhaustive(s).candidates);
}
BENCHMARK(BM_SweepQ8m2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
