#include "qcoord/strategy/quantum_strategy.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qcoord/error.hpp"
#include "qcoord/quantum/operations.hpp"

namespace qcoord {
namespace {

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return m;
}

}  // namespace

QuantumStrategyProfile QuantumStrategyProfile::create(DensityMatrix shared,
                                                      MeasurementFamily family_a,
                                                      MeasurementFamily family_b,
                                                      std::vector<std::size_t> action_of_outcome_a,
                                                      std::vector<std::size_t> action_of_outcome_b) {
  if (shared.dim() != family_a.dim() * family_b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "shared state dimension " + std::to_string(shared.dim()) + " is not " +
                    std::to_string(family_a.dim()) + "*" + std::to_string(family_b.dim()));
  }
  if (action_of_outcome_a.empty()) action_of_outcome_a = identity_map(family_a.outcomes());
  if (action_of_outcome_b.empty()) action_of_outcome_b = identity_map(family_b.outcomes());
  if (action_of_outcome_a.size() != family_a.outcomes() ||
      action_of_outcome_b.size() != family_b.outcomes()) {
    throw Error(ErrorKind::IncompatibleLabels, "outcome-to-action map size differs from outcome count");
  }
  return QuantumStrategyProfile(std::move(shared), std::move(family_a), std::move(family_b),
                                std::move(action_of_outcome_a), std::move(action_of_outcome_b));
}

void OptimizerConfig::validate() const {
  if (grid_resolution < 1 || refinement_iterations < 1 || restarts < 1 || max_grid_points < 1) {
    throw Error(ErrorKind::InvalidConfig, "optimizer counts must be at least 1");
  }
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorKind::InvalidConfig, "optimizer tolerance must be positive");
  }
}

BehaviorTable behavior_from_profile(const QuantumStrategyProfile& profile, const Game& g) {
  const auto& fa = profile.family_a();
  const auto& fb = profile.family_b();
  if (fa.states() != g.num_states_a() || fb.states() != g.num_states_b()) {
    throw Error(ErrorKind::IncompatibleLabels, "measurement family size differs from state count");
  }
  for (std::size_t a : profile.action_of_outcome_a()) {
    if (a >= g.num_actions_a()) throw Error(ErrorKind::IncompatibleLabels, "outcome mapped to unknown action of A");
  }
  for (std::size_t b : profile.action_of_outcome_b()) {
    if (b >= g.num_actions_b()) throw Error(ErrorKind::IncompatibleLabels, "outcome mapped to unknown action of B");
  }
  BehaviorTable q(g.num_actions_a(), g.num_actions_b(), g.num_states_a(), g.num_states_b());
  for (std::size_t phi = 0; phi < g.num_states_a(); ++phi) {
    for (std::size_t psi = 0; psi < g.num_states_b(); ++psi) {
      const ProbabilityTable t = joint_distribution(profile.shared(), fa[phi], fb[psi]);
      for (std::size_t s = 0; s < t.rows; ++s) {
        for (std::size_t u = 0; u < t.cols; ++u) {
          q(profile.action_of_outcome_a()[s], profile.action_of_outcome_b()[u], phi, psi) += t(s, u);
        }
      }
    }
  }
  return q;
}

double evaluate_qubit_strategy(const Game& g, const QubitAngleStrategy& s,
                               const DensityMatrix& shared) {
  if (g.num_actions_a() != 2 || g.num_actions_b() != 2) {
    throw Error(ErrorKind::NonBinaryActions, "angle strategies need two actions per player");
  }
  if (s.angles_a.size() != g.num_states_a() || s.angles_b.size() != g.num_states_b()) {
    throw Error(ErrorKind::IncompatibleLabels, "one angle per state of nature is required");
  }
  auto profile = QuantumStrategyProfile::create(shared, angle_family(s.angles_a), angle_family(s.angles_b));
  return expected_payoff(g, behavior_from_profile(profile, g));
}

}  // namespace qcoord
