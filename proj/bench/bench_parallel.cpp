// OpenMP kernels against their serial references. The argument of the
// parallel variants is the thread count.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "qcoord/game/game.hpp"
#include "qcoord/quantum/operations.hpp"
#include "qcoord/strategy/quantum_strategy.hpp"

namespace {

using namespace qcoord;

// Random payoffs, 3 actions and 5 states per player: 243^2 strategy pairs.
Game enumeration_game() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Game::Spec s;
  s.states_a = {"0", "1", "2", "3", "4"};
  s.states_b = s.states_a;
  s.prior_a.assign(5, 0.2);
  s.prior_b.assign(5, 0.2);
  s.actions_a = {"0", "1", "2"};
  s.actions_b = s.actions_a;
  s.payoff.resize(3 * 3 * 5 * 5);
  for (double& v : s.payoff) v = u(rng);
  return Game::create(std::move(s));
}

OptimizerConfig bench_config() {
  OptimizerConfig cfg;
  cfg.restarts = 64;
  cfg.grid_resolution = 12;
  cfg.seed = 3;
  return cfg;
}

void BM_ClassicalValue(benchmark::State& state) {
  const Game g = enumeration_game();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classical_value(g).value);
}

void BM_ClassicalValueSerial(benchmark::State& state) {
  const Game g = enumeration_game();
  for (auto _ : state) benchmark::DoNotOptimize(classical_value_serial(g).value);
}

void BM_OptimizeAngles(benchmark::State& state) {
  const Game g = chsh_game();
  const auto rho = singlet_state();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(optimize_angles(g, rho, bench_config()).value);
}

void BM_OptimizeAnglesSerial(benchmark::State& state) {
  const Game g = chsh_game();
  const auto rho = singlet_state();
  for (auto _ : state) benchmark::DoNotOptimize(optimize_angles_serial(g, rho, bench_config()).value);
}

void BM_Seesaw(benchmark::State& state) {
  const Game g = chsh_game();
  const auto rho = singlet_state();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(seesaw_optimize(g, rho, bench_config()).value);
}

void BM_SeesawSerial(benchmark::State& state) {
  const Game g = chsh_game();
  const auto rho = singlet_state();
  for (auto _ : state) benchmark::DoNotOptimize(seesaw_optimize_serial(g, rho, bench_config()).value);
}

}  // namespace

BENCHMARK(BM_ClassicalValueSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassicalValue)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizeAnglesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OptimizeAngles)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeesawSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Seesaw)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
