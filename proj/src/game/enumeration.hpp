#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qcoord/error.hpp"
#include "qcoord/game/game.hpp"

namespace qcoord::detail {

// Number of deterministic maps from `states` states to `actions` actions,
// as a double so overflow cannot hide a cap violation.
inline double strategy_count(std::size_t actions, std::size_t states) {
  return std::pow(static_cast<double>(actions), static_cast<double>(states));
}

inline void check_enumeration_cap(const Game& g, double cap) {
  const double pairs = strategy_count(g.num_actions_a(), g.num_states_a()) *
                       strategy_count(g.num_actions_b(), g.num_states_b());
  if (pairs > cap) {
    throw Error(ErrorKind::EnumerationCapExceeded,
                std::to_string(pairs) + " strategy pairs exceed the cap " + std::to_string(cap));
  }
}

// Digit k of `index` in base `actions`, most significant digit first.
inline void decode_strategy(std::uint64_t index, std::size_t actions, std::vector<std::size_t>& out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = static_cast<std::size_t>(index % actions);
    index /= actions;
  }
}

}  // namespace qcoord::detail
