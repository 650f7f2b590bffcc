#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "angle_objective.hpp"
#include "nelder_mead.hpp"
#include "qcoord/error.hpp"
#include "qcoord/quantum/random.hpp"
#include "qcoord/strategy/quantum_strategy.hpp"

namespace qcoord {
namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct GridBest {
  double value = 0.0;
  std::uint64_t index = 0;
  bool valid = false;

  bool beats(const GridBest& o) const {
    if (!valid) return false;
    if (!o.valid) return true;
    if (value != o.value) return value > o.value;
    return index < o.index;
  }
};

// Grid point `index`: the full tensor grid when it fits, otherwise a
// seeded pseudo-random subset of grid nodes.
void grid_point(std::uint64_t index, std::size_t resolution, bool full, std::uint64_t seed,
                std::vector<double>& x) {
  const double h = kPi / static_cast<double>(resolution);
  if (full) {
    for (std::size_t k = x.size(); k-- > 0;) {
      x[k] = h * static_cast<double>(index % resolution);
      index /= resolution;
    }
    return;
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    const std::uint64_t r = splitmix64(seed ^ splitmix64(index * x.size() + k));
    x[k] = h * static_cast<double>(r % resolution);
  }
}

double wrap_angle(double t) {
  double w = std::fmod(t, kPi);
  if (w < 0.0) w += kPi;
  return w;
}

AngleOptimum run_angle_search(const Game& g, const DensityMatrix& shared,
                              const OptimizerConfig& cfg, bool parallel) {
  cfg.validate();
  if (g.num_actions_a() != 2 || g.num_actions_b() != 2) {
    throw Error(ErrorKind::NonBinaryActions, "angle optimization needs two actions per player");
  }
  if (shared.dim() != 4) {
    throw Error(ErrorKind::DimensionMismatch, "angle optimization needs a two-qubit state");
  }
  const detail::AngleObjective objective(g, shared);
  const std::size_t dims = objective.dims();

  const double full_count = std::pow(static_cast<double>(cfg.grid_resolution), static_cast<double>(dims));
  const bool full = full_count <= static_cast<double>(cfg.max_grid_points);
  const auto count = static_cast<std::int64_t>(full ? full_count : static_cast<double>(cfg.max_grid_points));

  GridBest grid;
#pragma omp parallel if (parallel)
  {
    GridBest local;
    std::vector<double> x(dims);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      grid_point(static_cast<std::uint64_t>(i), cfg.grid_resolution, full, cfg.seed, x);
      const GridBest c{objective(x), static_cast<std::uint64_t>(i), true};
      if (c.beats(local)) local = c;
    }
#pragma omp critical(qcoord_angle_grid)
    {
      if (local.beats(grid)) grid = local;
    }
  }
  std::vector<double> grid_x(dims);
  grid_point(grid.index, cfg.grid_resolution, full, cfg.seed, grid_x);

  const double step = std::min(kPi / static_cast<double>(cfg.grid_resolution), kPi / 4);
  const auto restarts = static_cast<std::int64_t>(cfg.restarts);
  std::vector<detail::SimplexSearchResult> results(cfg.restarts);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t k = 0; k < restarts; ++k) {
    std::vector<double> x0 = grid_x;
    if (k > 0) {
      Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(k));
      std::uniform_real_distribution<double> angle(0.0, kPi);
      for (double& t : x0) t = angle(rng);
    }
    results[static_cast<std::size_t>(k)] = detail::simplex_maximize(
        [&objective](const std::vector<double>& x) { return objective(x); }, std::move(x0), step,
        cfg.refinement_iterations, cfg.tolerance, /*record_trace=*/true);
  }

  std::size_t winner = 0;
  for (std::size_t k = 1; k < results.size(); ++k) {
    if (results[k].value > results[winner].value) winner = k;
  }

  AngleOptimum out;
  out.grid_value = grid.value;
  out.best_restart = winner;
  out.trace = std::move(results[winner].trace);
  const auto& x = results[winner].x;
  for (std::size_t k = 0; k < dims; ++k) {
    (k < g.num_states_a() ? out.strategy.angles_a : out.strategy.angles_b).push_back(wrap_angle(x[k]));
  }
  out.value = evaluate_qubit_strategy(g, out.strategy, shared);
  return out;
}

}  // namespace

AngleOptimum optimize_angles(const Game& g, const DensityMatrix& shared, const OptimizerConfig& cfg) {
  return run_angle_search(g, shared, cfg, /*parallel=*/true);
}

AngleOptimum optimize_angles_serial(const Game& g, const DensityMatrix& shared,
                                    const OptimizerConfig& cfg) {
  return run_angle_search(g, shared, cfg, /*parallel=*/false);
}

}  // namespace qcoord
