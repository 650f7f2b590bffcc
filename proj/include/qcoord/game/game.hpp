#pragma once

#include <string>
#include <vector>

#include "qcoord/tolerances.hpp"

namespace qcoord {

/// Two-player team game with independent private states of nature.
///
/// Player A observes phi drawn from prior_a, player B observes psi drawn
/// from prior_b, and both receive the joint payoff pi(a, b, phi, psi).
/// The payoff is stored flat in [a][b][phi][psi] order.
class Game {
 public:
  struct Spec {
    std::vector<std::string> states_a;
    std::vector<std::string> states_b;
    std::vector<double> prior_a;
    std::vector<double> prior_b;
    std::vector<std::string> actions_a;
    std::vector<std::string> actions_b;
    std::vector<double> payoff;
  };

  /// Throws InvalidGame when a prior is not a distribution, the payoff
  /// tensor has the wrong size, or an entry is not finite.
  static Game create(Spec spec, const Tolerances& tol = {});

  std::size_t num_states_a() const noexcept { return s_.states_a.size(); }
  std::size_t num_states_b() const noexcept { return s_.states_b.size(); }
  std::size_t num_actions_a() const noexcept { return s_.actions_a.size(); }
  std::size_t num_actions_b() const noexcept { return s_.actions_b.size(); }

  const std::vector<std::string>& states_a() const noexcept { return s_.states_a; }
  const std::vector<std::string>& states_b() const noexcept { return s_.states_b; }
  const std::vector<std::string>& actions_a() const noexcept { return s_.actions_a; }
  const std::vector<std::string>& actions_b() const noexcept { return s_.actions_b; }
  const std::vector<double>& prior_a() const noexcept { return s_.prior_a; }
  const std::vector<double>& prior_b() const noexcept { return s_.prior_b; }
  const std::vector<double>& payoff_tensor() const noexcept { return s_.payoff; }

  double payoff(std::size_t a, std::size_t b, std::size_t phi, std::size_t psi) const {
    return s_.payoff[index(a, b, phi, psi)];
  }

  std::size_t index(std::size_t a, std::size_t b, std::size_t phi, std::size_t psi) const noexcept {
    return ((a * num_actions_b() + b) * num_states_a() + phi) * num_states_b() + psi;
  }

  /// True when pi(a, b, phi, psi) does not vary with psi (within `tol`).
  bool payoff_independent_of_psi(double tol = 0.0) const;

 private:
  explicit Game(Spec s) : s_(std::move(s)) {}
  Spec s_;
};

/// Per-player, per-own-state distributions over that player's actions.
struct ConditionalStrategy {
  std::vector<std::vector<double>> a;  // a[phi][action]
  std::vector<std::vector<double>> b;  // b[psi][action]
};

/// Conditional joint behavior q(a, b | phi, psi), stored [a][b][phi][psi].
class BehaviorTable {
 public:
  BehaviorTable(std::size_t actions_a, std::size_t actions_b, std::size_t states_a,
                std::size_t states_b);

  /// Checks nonnegativity and per-(phi, psi) normalization; throws InvalidBehavior.
  void validate(const Tolerances& tol = {}) const;

  static BehaviorTable uniform(const Game& g);
  /// A plays strategy_a[phi], B plays strategy_b[psi], deterministically.
  static BehaviorTable deterministic(const Game& g, const std::vector<std::size_t>& strategy_a,
                                     const std::vector<std::size_t>& strategy_b);
  /// Product behavior p_a(phi) q_b(psi).
  static BehaviorTable from_strategy(const Game& g, const ConditionalStrategy& s,
                                     const Tolerances& tol = {});

  std::size_t actions_a() const noexcept { return na_; }
  std::size_t actions_b() const noexcept { return nb_; }
  std::size_t states_a() const noexcept { return nphi_; }
  std::size_t states_b() const noexcept { return npsi_; }

  double& operator()(std::size_t a, std::size_t b, std::size_t phi, std::size_t psi) {
    return q_[((a * nb_ + b) * nphi_ + phi) * npsi_ + psi];
  }
  double operator()(std::size_t a, std::size_t b, std::size_t phi, std::size_t psi) const {
    return q_[((a * nb_ + b) * nphi_ + phi) * npsi_ + psi];
  }

  const std::vector<double>& values() const noexcept { return q_; }

 private:
  std::size_t na_, nb_, nphi_, npsi_;
  std::vector<double> q_;
};

/// sum prior_a(phi) prior_b(psi) q(a,b|phi,psi) pi(a,b,phi,psi).
/// Throws ShapeMismatch when the behavior's dimensions differ from the game's.
double expected_payoff(const Game& g, const BehaviorTable& behavior);

/// Best deterministic strategy pair. strategy_a[phi] is an action index.
struct ClassicalSolution {
  double value = 0.0;
  std::vector<std::size_t> strategy_a;
  std::vector<std::size_t> strategy_b;
};

inline constexpr double kDefaultEnumerationCap = 1e7;

/// Exact classical value by enumerating every deterministic strategy pair.
///
/// Because expected payoff is linear in each player's (possibly shared-
/// randomness) strategy, the maximum over deterministic pairs is also the
/// maximum over all local strategies with shared randomness. Ties go to the
/// lexicographically smallest (strategy_a, strategy_b) encoding, with
/// strategy_a[0] the most significant digit.
///
/// Parallelized across strategy_a with OpenMP; the reduction is
/// schedule-independent. Throws EnumerationCapExceeded when the pair count
/// exceeds `cap`.
ClassicalSolution classical_value(const Game& g, double cap = kDefaultEnumerationCap);

/// Single-threaded reference: builds each deterministic BehaviorTable and
/// calls expected_payoff.
ClassicalSolution classical_value_serial(const Game& g, double cap = kDefaultEnumerationCap);

/// The coordination game with phi in {0, pi/4}, psi in {-pi/8, pi/8},
/// binary actions, uniform priors. Players win (payoff 1) by playing
/// opposite actions, except at (phi, psi) = (pi/4, -pi/8) where they must
/// play the same action.
Game chsh_game();

/// Variant of chsh_game() whose payoff ignores psi: opposite actions win
/// when phi = 0, equal actions win when phi = pi/4.
Game chsh_psi_free_game();

/// Numeric angle attached to each state label of chsh_game().
std::vector<double> chsh_angles_a();
std::vector<double> chsh_angles_b();

}  // namespace qcoord
