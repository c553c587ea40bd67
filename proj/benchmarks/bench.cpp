#include <benchmark/benchmark.h>

#include <sstream>

#include "dcjindel/enumerate.hpp"
#include "dcjindel/ilp.hpp"
#include "dcjindel/recombination.hpp"
#include "dcjindel/sim.hpp"

using namespace dcj;

namespace {

std::pair<Genome, Genome> simulated(long rootLength, double weight, std::uint64_t seed) {
  SimConfig cfg;
  cfg.rootLength = rootLength;
  cfg.edgeWeights = {weight, weight};
  cfg.duplicationRate = 0.4;
  cfg.seed = seed;
  SimResult r = simulate_pair(cfg);
  return {r.a, r.b};
}

void BM_BuildMrd(benchmark::State& state) {
  auto [a, b] = simulated(state.range(0), state.range(0) / 10.0, 7);
  MarkerCensus c = census(a, b);
  for (auto _ : state) {
    Diagram d = build_mrd(a, b, c);
    benchmark::DoNotOptimize(d.edgeCount());
  }
}
BENCHMARK(BM_BuildMrd)->Arg(200)->Arg(2000);

void BM_BuildIlp(benchmark::State& state) {
  auto [a, b] = simulated(state.range(0), state.range(0) / 10.0, 7);
  MarkerCensus c = census(a, b);
  Diagram capped = cap_mrd(build_mrd(a, b, c), capping_plan(c));
  for (auto _ : state) {
    IlpModel m = build_ilp(capped);
    benchmark::DoNotOptimize(m.constraints.size());
  }
}
BENCHMARK(BM_BuildIlp)->Arg(200)->Arg(2000);

void BM_WriteLp(benchmark::State& state) {
  auto [a, b] = simulated(state.range(0), state.range(0) / 10.0, 7);
  MarkerCensus c = census(a, b);
  IlpModel m = build_ilp(cap_mrd(build_mrd(a, b, c), capping_plan(c)));
  for (auto _ : state) {
    std::ostringstream out;
    write_lp(m, out);
    benchmark::DoNotOptimize(out.str().size());
  }
}
BENCHMARK(BM_WriteLp)->Arg(200)->Arg(2000);

void BM_GreedyDelta(benchmark::State& state) {
  GroupTally t;
  t.setCounters({9, 3, 2, 8, 1, 4, 5, 6});
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_delta(t).delta);
  }
}
BENCHMARK(BM_GreedyDelta);

void BM_SolveByEnumeration(benchmark::State& state) {
  Genome a{"A", {Chromosome::linear({{"1", Orientation::Forward},
                                     {"3", Orientation::Forward},
                                     {"2", Orientation::Forward},
                                     {"5", Orientation::Reverse},
                                     {"4", Orientation::Reverse},
                                     {"3", Orientation::Forward},
                                     {"5", Orientation::Forward},
                                     {"4", Orientation::Forward}})}};
  Genome b{"B", {Chromosome::linear({{"1", Orientation::Forward},
                                     {"6", Orientation::Forward},
                                     {"2", Orientation::Forward},
                                     {"3", Orientation::Forward},
                                     {"1", Orientation::Forward},
                                     {"7", Orientation::Forward},
                                     {"3", Orientation::Forward},
                                     {"4", Orientation::Forward},
                                     {"1", Orientation::Forward},
                                     {"3", Orientation::Forward}})}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_by_enumeration(a, b).distance);
  }
}
BENCHMARK(BM_SolveByEnumeration);

void BM_Simulate(benchmark::State& state) {
  SimConfig cfg;
  cfg.rootLength = state.range(0);
  cfg.edgeWeights = {cfg.rootLength / 2.0, cfg.rootLength / 2.0};
  cfg.duplicationRate = 0.4;
  for (auto _ : state) {
    cfg.seed++;
    benchmark::DoNotOptimize(simulate_pair(cfg).a.markerCount());
  }
}
BENCHMARK(BM_Simulate)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
