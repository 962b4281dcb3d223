// Product-game growth per register, solver and synthesis timings.
// The growth report is carried by the counters of BM_ProductGameSize.

#include "oracle.hpp"

#include "regsynth/game/product.hpp"
#include "regsynth/game/solver.hpp"
#include "regsynth/synth/pipeline.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

namespace {

rs::OneSidedSpec load(const std::string& name) {
  std::ifstream in(std::string(REGSYNTH_SPECS_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return rs::parse_spec(ss.str());
}

void BM_ProductGameSize(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto spec = rs::oracle::rotating_spec(k);
  std::size_t vertices = 0, edges = 0, dpa_states = 0;
  for (auto _ : state) {
    auto game = rs::build_parity_game(spec, rs::Domain::Nat);
    vertices = static_cast<std::size_t>(game.game.num_vertices());
    edges = game.game.num_edges();
    dpa_states = game.infeasible->num_states();
    benchmark::DoNotOptimize(vertices);
  }
  state.counters["registers"] = k;
  state.counters["vertices"] = static_cast<double>(vertices);
  state.counters["edges"] = static_cast<double>(edges);
  state.counters["dpa_states"] = static_cast<double>(dpa_states);
  if (k > 1) {
    const auto smaller = rs::build_parity_game(rs::oracle::rotating_spec(k - 1), rs::Domain::Nat);
    state.counters["growth_factor"] = static_cast<double>(vertices) / smaller.game.num_vertices();
  }
}
BENCHMARK(BM_ProductGameSize)->DenseRange(1, 3)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_ZielonkaRandom(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const int n = static_cast<int>(state.range(0));
  auto game = rs::random_parity_game(n, 6, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rs::solve_parity(game));
  state.counters["vertices"] = n;
}
BENCHMARK(BM_ZielonkaRandom)->RangeMultiplier(4)->Range(16, 4096)->Unit(benchmark::kMicrosecond);

void BM_ZielonkaProduct(benchmark::State& state) {
  const auto game = rs::build_parity_game(rs::oracle::rotating_spec(static_cast<int>(state.range(0))), rs::Domain::Nat);
  for (auto _ : state) benchmark::DoNotOptimize(rs::solve_parity(game.game));
  state.counters["vertices"] = game.game.num_vertices();
}
BENCHMARK(BM_ZielonkaProduct)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_SynthesizeUpWeGo(benchmark::State& state) {
  const auto spec = load("fig1.rsa");
  const auto domain = state.range(0) == 0 ? rs::Domain::Nat : rs::Domain::Rat;
  for (auto _ : state) benchmark::DoNotOptimize(rs::synthesize(spec, domain).realizable);
  state.SetLabel(domain == rs::Domain::Nat ? "nat" : "rat");
}
BENCHMARK(BM_SynthesizeUpWeGo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
