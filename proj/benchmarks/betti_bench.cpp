#include <benchmark/benchmark.h>

#include "normdepth/betti.hpp"
#include "normdepth/constructions.hpp"
#include "normdepth/graph.hpp"
#include "normdepth/random_instances.hpp"

namespace nd = normdepth;

namespace {

std::vector<nd::MonomialIdeal> ideals(int variables, int generators) {
  nd::Rng rng(42);
  std::vector<nd::MonomialIdeal> out;
  for (int i = 0; i < 16; ++i) out.push_back(nd::random_ideal(rng, variables, generators));
  return out;
}

void BM_Hochster(benchmark::State& state) {
  const auto batch = ideals(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) {
    for (const auto& i : batch) benchmark::DoNotOptimize(nd::betti_hochster(i));
  }
}

void BM_Taylor(benchmark::State& state) {
  const auto batch = ideals(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) {
    for (const auto& i : batch) benchmark::DoNotOptimize(nd::betti_taylor(i));
  }
}

void BM_HochsterMod2(benchmark::State& state) {
  const auto batch = ideals(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) {
    for (const auto& i : batch) {
      benchmark::DoNotOptimize(nd::betti_hochster(i, nd::FieldSpec::prime(2)));
    }
  }
}

void BM_ProfileVanishingTail(benchmark::State& state) {
  const auto c = nd::vanishing_tail_graph(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nd::g_profile(c.ideal));
  state.SetLabel(std::to_string(c.variable_count()) + " variables");
}

void BM_ProfileCompleteBipartite(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const auto ideal = nd::edge_ideal(nd::complete_bipartite(t, t));
  for (auto _ : state) benchmark::DoNotOptimize(nd::g_profile(ideal));
}

void BM_LinearQuotientsOrder(benchmark::State& state) {
  const auto ideal = nd::squarefree_power(nd::edge_ideal(nd::six_vertex_cut_graph()), 2);
  for (auto _ : state) benchmark::DoNotOptimize(nd::linear_quotients_order(ideal));
}

}  // namespace

BENCHMARK(BM_Hochster)->DenseRange(5, 8);
BENCHMARK(BM_Taylor)->DenseRange(5, 8);
BENCHMARK(BM_HochsterMod2)->Arg(8);
BENCHMARK(BM_ProfileVanishingTail)->DenseRange(2, 4);
BENCHMARK(BM_ProfileCompleteBipartite)->DenseRange(2, 4);
BENCHMARK(BM_LinearQuotientsOrder);

BENCHMARK_MAIN();
