#include <cstdint>
#include <vector>

#include "enumeration.hpp"
#include "qcoord/game/game.hpp"

namespace qcoord {

namespace {

struct Candidate {
  double value;
  std::uint64_t index_a;
  std::uint64_t index_b;
  bool valid = false;

  // Larger value wins; equal values go to the smaller (index_a, index_b).
  bool beats(const Candidate& other) const {
    if (!valid) return false;
    if (!other.valid) return true;
    if (value != other.value) return value > other.value;
    if (index_a != other.index_a) return index_a < other.index_a;
    return index_b < other.index_b;
  }
};

}  // namespace

ClassicalSolution classical_value(const Game& g, double cap) {
  detail::check_enumeration_cap(g, cap);
  const std::size_t na = g.num_actions_a();
  const std::size_t nb = g.num_actions_b();
  const std::size_t nphi = g.num_states_a();
  const std::size_t npsi = g.num_states_b();
  const auto count_a = static_cast<std::int64_t>(detail::strategy_count(na, nphi));
  const auto count_b = static_cast<std::uint64_t>(detail::strategy_count(nb, npsi));

  Candidate best;
#pragma omp parallel
  {
    Candidate local;
    std::vector<std::size_t> fa(nphi);
    std::vector<std::size_t> fb(npsi);
    // gain[psi * nb + b]: contribution of B playing b at psi, given fa.
    std::vector<double> gain(npsi * nb);

#pragma omp for schedule(static)
    for (std::int64_t ia = 0; ia < count_a; ++ia) {
      detail::decode_strategy(static_cast<std::uint64_t>(ia), na, fa);
      for (std::size_t psi = 0; psi < npsi; ++psi) {
        for (std::size_t b = 0; b < nb; ++b) {
          double acc = 0.0;
          for (std::size_t phi = 0; phi < nphi; ++phi) {
            acc += g.prior_a()[phi] * g.payoff(fa[phi], b, phi, psi);
          }
          gain[psi * nb + b] = g.prior_b()[psi] * acc;
        }
      }
      for (std::uint64_t ib = 0; ib < count_b; ++ib) {
        detail::decode_strategy(ib, nb, fb);
        double value = 0.0;
        for (std::size_t psi = 0; psi < npsi; ++psi) value += gain[psi * nb + fb[psi]];
        const Candidate c{value, static_cast<std::uint64_t>(ia), ib, true};
        if (c.beats(local)) local = c;
      }
    }

#pragma omp critical(qcoord_classical_value)
    {
      if (local.beats(best)) best = local;
    }
  }

  ClassicalSolution out;
  out.value = best.value;
  out.strategy_a.resize(nphi);
  out.strategy_b.resize(npsi);
  detail::decode_strategy(best.index_a, na, out.strategy_a);
  detail::decode_strategy(best.index_b, nb, out.strategy_b);
  return out;
}

}  // namespace qcoord
