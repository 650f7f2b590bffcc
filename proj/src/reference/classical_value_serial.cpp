#include <cstdint>
#include <vector>

#include "../game/enumeration.hpp"
#include "qcoord/game/game.hpp"

namespace qcoord {

ClassicalSolution classical_value_serial(const Game& g, double cap) {
  detail::check_enumeration_cap(g, cap);
  const auto count_a = static_cast<std::uint64_t>(detail::strategy_count(g.num_actions_a(), g.num_states_a()));
  const auto count_b = static_cast<std::uint64_t>(detail::strategy_count(g.num_actions_b(), g.num_states_b()));

  ClassicalSolution best;
  bool have = false;
  std::vector<std::size_t> fa(g.num_states_a());
  std::vector<std::size_t> fb(g.num_states_b());
  for (std::uint64_t ia = 0; ia < count_a; ++ia) {
    detail::decode_strategy(ia, g.num_actions_a(), fa);
    for (std::uint64_t ib = 0; ib < count_b; ++ib) {
      detail::decode_strategy(ib, g.num_actions_b(), fb);
      const double v = expected_payoff(g, BehaviorTable::deterministic(g, fa, fb));
      // Strict improvement only: enumeration order is the tie-break order.
      if (!have || v > best.value) {
        best = {v, fa, fb};
        have = true;
      }
    }
  }
  return best;
}

}  // namespace qcoord
