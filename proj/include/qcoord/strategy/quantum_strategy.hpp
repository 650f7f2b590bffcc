#pragma once

#include <cstdint>
#include <vector>

#include "qcoord/game/game.hpp"
#include "qcoord/quantum/density_matrix.hpp"
#include "qcoord/quantum/measurement.hpp"

namespace qcoord {

/// Qubit projective strategy: player A measures projective_pair(angles_a[phi]),
/// player B measures projective_pair(angles_b[psi]); both play the outcome.
struct QubitAngleStrategy {
  std::vector<double> angles_a;
  std::vector<double> angles_b;
};

/// Shared state plus one measurement family per player. Outcome k of player
/// A's measurement is played as action action_of_outcome_a[k] (identity by
/// default), likewise for B.
class QuantumStrategyProfile {
 public:
  /// Empty outcome maps mean "play the outcome". Throws DimensionMismatch if
  /// the shared state is not dim_a * dim_b dimensional.
  static QuantumStrategyProfile create(DensityMatrix shared, MeasurementFamily family_a,
                                       MeasurementFamily family_b,
                                       std::vector<std::size_t> action_of_outcome_a = {},
                                       std::vector<std::size_t> action_of_outcome_b = {});

  const DensityMatrix& shared() const noexcept { return shared_; }
  const MeasurementFamily& family_a() const noexcept { return family_a_; }
  const MeasurementFamily& family_b() const noexcept { return family_b_; }
  const std::vector<std::size_t>& action_of_outcome_a() const noexcept { return map_a_; }
  const std::vector<std::size_t>& action_of_outcome_b() const noexcept { return map_b_; }

 private:
  QuantumStrategyProfile(DensityMatrix s, MeasurementFamily a, MeasurementFamily b,
                         std::vector<std::size_t> ma, std::vector<std::size_t> mb)
      : shared_(std::move(s)), family_a_(std::move(a)), family_b_(std::move(b)),
        map_a_(std::move(ma)), map_b_(std::move(mb)) {}

  DensityMatrix shared_;
  MeasurementFamily family_a_;
  MeasurementFamily family_b_;
  std::vector<std::size_t> map_a_;
  std::vector<std::size_t> map_b_;
};

struct OptimizerConfig {
  std::size_t grid_resolution = 24;        // points per angle on [0, pi)
  std::size_t refinement_iterations = 200; // simplex iterations, or see-saw sweeps
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
  std::size_t max_grid_points = 1u << 20;  // beyond this the grid is subsampled

  /// Throws InvalidConfig.
  void validate() const;
};

/// q(a, b | phi, psi) = sum over outcomes s -> a, t -> b of
/// tr(rho M_{s|phi} (x) N_{t|psi}).
/// Throws IncompatibleLabels when family sizes or outcome maps do not fit
/// the game, DimensionMismatch on state/measurement dimensions.
BehaviorTable behavior_from_profile(const QuantumStrategyProfile& profile, const Game& g);

/// Expected payoff of the angle strategy on a two-qubit shared state.
double evaluate_qubit_strategy(const Game& g, const QubitAngleStrategy& s,
                               const DensityMatrix& shared);

struct AngleOptimum {
  QubitAngleStrategy strategy;     // angles wrapped into [0, pi)
  double value = 0.0;              // evaluate_qubit_strategy(g, strategy, shared)
  double grid_value = 0.0;         // best coarse-grid value
  std::size_t best_restart = 0;
  std::vector<double> trace;       // best value per iteration of the winning restart
};

/// Coarse grid over all angles, then multi-start Nelder-Mead refinement.
/// Restart 0 starts from the best grid point, the others from seeded random
/// angles. Restarts run in parallel under OpenMP; the winner is the highest
/// value with ties to the lowest restart index, so the result does not
/// depend on the thread count.
///
/// Requires binary actions for both players and a 4-dimensional state.
AngleOptimum optimize_angles(const Game& g, const DensityMatrix& shared,
                             const OptimizerConfig& cfg = {});

/// Same search on a single thread.
AngleOptimum optimize_angles_serial(const Game& g, const DensityMatrix& shared,
                                    const OptimizerConfig& cfg = {});

struct LocalDims {
  std::size_t a = 2;
  std::size_t b = 2;
};

struct SeesawOptimum {
  QuantumStrategyProfile profile;
  double value = 0.0;
  std::size_t best_restart = 0;
  std::vector<double> trace;  // value after each sweep of the winning restart
};

/// Alternating exact best responses over binary POVMs.
///
/// With B's family fixed, A's payoff for state phi is
/// sum_a tr(M_{a|phi} K_{a|phi}) where
/// K_{a|phi} = sum_{psi,b} prior_a(phi) prior_b(psi) pi(a,b,phi,psi) tr_B[rho (I (x) N_{b|psi})],
/// which is maximized by the projector onto the nonnegative eigenspace of
/// K_{0|phi} - K_{1|phi}. B's update is symmetric. Each restart begins from
/// a seeded random projective family for B and stops once a sweep improves
/// by less than cfg.tolerance or cfg.refinement_iterations sweeps have run.
///
/// Throws NonBinaryActions unless both players have exactly two actions.
SeesawOptimum seesaw_optimize(const Game& g, const DensityMatrix& shared,
                              const OptimizerConfig& cfg = {}, LocalDims dims = {});

SeesawOptimum seesaw_optimize_serial(const Game& g, const DensityMatrix& shared,
                                     const OptimizerConfig& cfg = {}, LocalDims dims = {});

}  // namespace qcoord
