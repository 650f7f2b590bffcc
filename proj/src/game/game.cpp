#include "qcoord/game/game.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcoord/error.hpp"

namespace qcoord {
namespace {

void check_prior(const std::vector<double>& prior, const char* name, const Tolerances& tol) {
  if (prior.empty()) throw Error(ErrorKind::InvalidGame, std::string(name) + " is empty");
  double total = 0.0;
  for (double p : prior) {
    if (!std::isfinite(p) || p < 0.0) {
      throw Error(ErrorKind::InvalidGame, std::string(name) + " has a negative or non-finite entry");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol.prob) {
    throw Error(ErrorKind::InvalidGame,
                std::string(name) + " sums to " + std::to_string(total) + ", not 1");
  }
}

}  // namespace

Game Game::create(Spec spec, const Tolerances& tol) {
  if (spec.prior_a.size() != spec.states_a.size()) {
    throw Error(ErrorKind::InvalidGame, "prior_a length differs from states_a");
  }
  if (spec.prior_b.size() != spec.states_b.size()) {
    throw Error(ErrorKind::InvalidGame, "prior_b length differs from states_b");
  }
  check_prior(spec.prior_a, "prior_a", tol);
  check_prior(spec.prior_b, "prior_b", tol);
  if (spec.actions_a.empty() || spec.actions_b.empty()) {
    throw Error(ErrorKind::InvalidGame, "each player needs at least one action");
  }
  const std::size_t expected = spec.actions_a.size() * spec.actions_b.size() *
                               spec.states_a.size() * spec.states_b.size();
  if (spec.payoff.size() != expected) {
    throw Error(ErrorKind::InvalidGame, "payoff has " + std::to_string(spec.payoff.size()) +
                                            " entries, expected " + std::to_string(expected));
  }
  for (double v : spec.payoff) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidGame, "payoff entry is not finite");
  }
  return Game(std::move(spec));
}

bool Game::payoff_independent_of_psi(double tol) const {
  for (std::size_t a = 0; a < num_actions_a(); ++a) {
    for (std::size_t b = 0; b < num_actions_b(); ++b) {
      for (std::size_t phi = 0; phi < num_states_a(); ++phi) {
        const double ref = payoff(a, b, phi, 0);
        for (std::size_t psi = 1; psi < num_states_b(); ++psi) {
          if (std::abs(payoff(a, b, phi, psi) - ref) > tol) return false;
        }
      }
    }
  }
  return true;
}

BehaviorTable::BehaviorTable(std::size_t actions_a, std::size_t actions_b, std::size_t states_a,
                             std::size_t states_b)
    : na_(actions_a), nb_(actions_b), nphi_(states_a), npsi_(states_b),
      q_(actions_a * actions_b * states_a * states_b, 0.0) {}

void BehaviorTable::validate(const Tolerances& tol) const {
  for (std::size_t phi = 0; phi < nphi_; ++phi) {
    for (std::size_t psi = 0; psi < npsi_; ++psi) {
      double total = 0.0;
      for (std::size_t a = 0; a < na_; ++a) {
        for (std::size_t b = 0; b < nb_; ++b) {
          const double v = (*this)(a, b, phi, psi);
          if (!std::isfinite(v) || v < -tol.psd) {
            throw Error(ErrorKind::InvalidBehavior, "negative or non-finite behavior entry");
          }
          total += v;
        }
      }
      if (std::abs(total - 1.0) > tol.prob) {
        throw Error(ErrorKind::InvalidBehavior, "behavior slice (" + std::to_string(phi) + ", " +
                                                    std::to_string(psi) + ") sums to " +
                                                    std::to_string(total));
      }
    }
  }
}

BehaviorTable BehaviorTable::uniform(const Game& g) {
  BehaviorTable t(g.num_actions_a(), g.num_actions_b(), g.num_states_a(), g.num_states_b());
  const double w = 1.0 / static_cast<double>(g.num_actions_a() * g.num_actions_b());
  for (double& v : t.q_) v = w;
  return t;
}

BehaviorTable BehaviorTable::deterministic(const Game& g, const std::vector<std::size_t>& strategy_a,
                                           const std::vector<std::size_t>& strategy_b) {
  if (strategy_a.size() != g.num_states_a() || strategy_b.size() != g.num_states_b()) {
    throw Error(ErrorKind::ShapeMismatch, "deterministic strategy length differs from state count");
  }
  BehaviorTable t(g.num_actions_a(), g.num_actions_b(), g.num_states_a(), g.num_states_b());
  for (std::size_t phi = 0; phi < g.num_states_a(); ++phi) {
    for (std::size_t psi = 0; psi < g.num_states_b(); ++psi) {
      if (strategy_a[phi] >= g.num_actions_a() || strategy_b[psi] >= g.num_actions_b()) {
        throw Error(ErrorKind::ShapeMismatch, "strategy names an action out of range");
      }
      t(strategy_a[phi], strategy_b[psi], phi, psi) = 1.0;
    }
  }
  return t;
}

BehaviorTable BehaviorTable::from_strategy(const Game& g, const ConditionalStrategy& s,
                                           const Tolerances& tol) {
  if (s.a.size() != g.num_states_a() || s.b.size() != g.num_states_b()) {
    throw Error(ErrorKind::ShapeMismatch, "conditional strategy state count differs from game");
  }
  auto check = [&](const std::vector<double>& v, std::size_t n) {
    if (v.size() != n) throw Error(ErrorKind::ShapeMismatch, "strategy action count differs");
    double total = 0.0;
    for (double x : v) {
      if (!std::isfinite(x) || x < 0.0) throw Error(ErrorKind::InvalidBehavior, "negative mixed action");
      total += x;
    }
    if (std::abs(total - 1.0) > tol.prob) {
      throw Error(ErrorKind::InvalidBehavior, "mixed action does not sum to 1");
    }
  };
  for (const auto& v : s.a) check(v, g.num_actions_a());
  for (const auto& v : s.b) check(v, g.num_actions_b());

  BehaviorTable t(g.num_actions_a(), g.num_actions_b(), g.num_states_a(), g.num_states_b());
  for (std::size_t a = 0; a < t.na_; ++a) {
    for (std::size_t b = 0; b < t.nb_; ++b) {
      for (std::size_t phi = 0; phi < t.nphi_; ++phi) {
        for (std::size_t psi = 0; psi < t.npsi_; ++psi) t(a, b, phi, psi) = s.a[phi][a] * s.b[psi][b];
      }
    }
  }
  return t;
}

double expected_payoff(const Game& g, const BehaviorTable& behavior) {
  if (behavior.actions_a() != g.num_actions_a() || behavior.actions_b() != g.num_actions_b() ||
      behavior.states_a() != g.num_states_a() || behavior.states_b() != g.num_states_b()) {
    throw Error(ErrorKind::ShapeMismatch, "behavior table shape differs from the game");
  }
  double total = 0.0;
  for (std::size_t phi = 0; phi < g.num_states_a(); ++phi) {
    for (std::size_t psi = 0; psi < g.num_states_b(); ++psi) {
      const double w = g.prior_a()[phi] * g.prior_b()[psi];
      double cell = 0.0;
      for (std::size_t a = 0; a < g.num_actions_a(); ++a) {
        for (std::size_t b = 0; b < g.num_actions_b(); ++b) {
          cell += behavior(a, b, phi, psi) * g.payoff(a, b, phi, psi);
        }
      }
      total += w * cell;
    }
  }
  return total;
}

Game chsh_game() {
  Game::Spec s;
  s.states_a = {"0", "pi/4"};
  s.states_b = {"-pi/8", "pi/8"};
  s.prior_a = {0.5, 0.5};
  s.prior_b = {0.5, 0.5};
  s.actions_a = {"0", "1"};
  s.actions_b = {"0", "1"};
  s.payoff.resize(16);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t phi = 0; phi < 2; ++phi) {
        for (std::size_t psi = 0; psi < 2; ++psi) {
          const bool same_required = phi == 1 && psi == 0;
          const bool win = same_required ? a == b : a != b;
          s.payoff[((a * 2 + b) * 2 + phi) * 2 + psi] = win ? 1.0 : 0.0;
        }
      }
    }
  }
  return Game::create(std::move(s));
}

Game chsh_psi_free_game() {
  Game::Spec s;
  s.states_a = {"0", "pi/4"};
  s.states_b = {"-pi/8", "pi/8"};
  s.prior_a = {0.5, 0.5};
  s.prior_b = {0.5, 0.5};
  s.actions_a = {"0", "1"};
  s.actions_b = {"0", "1"};
  s.payoff.resize(16);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t phi = 0; phi < 2; ++phi)
        for (std::size_t psi = 0; psi < 2; ++psi) {
          const bool win = phi == 0 ? a != b : a == b;
          s.payoff[((a * 2 + b) * 2 + phi) * 2 + psi] = win ? 1.0 : 0.0;
        }
  return Game::create(std::move(s));
}

std::vector<double> chsh_angles_a() { return {0.0, std::numbers::pi / 4}; }
std::vector<double> chsh_angles_b() { return {-std::numbers::pi / 8, std::numbers::pi / 8}; }

}  // namespace qcoord
