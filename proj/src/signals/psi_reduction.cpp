#include <algorithm>
#include <cmath>

#include "qcoord/error.hpp"
#include "qcoord/signals/signals.hpp"

namespace qcoord {
namespace {

// p(s, t, phi) summed over psi, flat [s][t][phi].
std::vector<double> signal_phi_marginal(const JointSignalDistribution& p) {
  std::vector<double> m(p.ns() * p.nt() * p.nphi(), 0.0);
  for (std::size_t s = 0; s < p.ns(); ++s)
    for (std::size_t t = 0; t < p.nt(); ++t)
      for (std::size_t phi = 0; phi < p.nphi(); ++phi)
        for (std::size_t psi = 0; psi < p.npsi(); ++psi)
          m[(s * p.nt() + t) * p.nphi() + phi] += p(s, t, phi, psi);
  return m;
}

// p(t, phi) flat [t][phi].
std::vector<double> t_phi_marginal(const JointSignalDistribution& p) {
  std::vector<double> m(p.nt() * p.nphi(), 0.0);
  for (std::size_t s = 0; s < p.ns(); ++s)
    for (std::size_t t = 0; t < p.nt(); ++t)
      for (std::size_t phi = 0; phi < p.nphi(); ++phi)
        for (std::size_t psi = 0; psi < p.npsi(); ++psi) m[t * p.nphi() + phi] += p(s, t, phi, psi);
  return m;
}

double payoff_under(const Game& g, const JointSignalDistribution& p) {
  double total = 0.0;
  for (std::size_t s = 0; s < p.ns(); ++s)
    for (std::size_t t = 0; t < p.nt(); ++t)
      for (std::size_t phi = 0; phi < p.nphi(); ++phi)
        for (std::size_t psi = 0; psi < p.npsi(); ++psi) total += g.payoff(s, t, phi, psi) * p(s, t, phi, psi);
  return total;
}

}  // namespace

JointSignalDistribution product_with_psi_marginal(const JointSignalDistribution& p) {
  const std::vector<double> stphi = signal_phi_marginal(p);
  const std::vector<double> pb = p.psi_marginal();
  std::vector<double> out(p.values().size());
  for (std::size_t s = 0; s < p.ns(); ++s)
    for (std::size_t t = 0; t < p.nt(); ++t)
      for (std::size_t phi = 0; phi < p.nphi(); ++phi)
        for (std::size_t psi = 0; psi < p.npsi(); ++psi)
          out[p.index(s, t, phi, psi)] = stphi[(s * p.nt() + t) * p.nphi() + phi] * pb[psi];
  return JointSignalDistribution::create(p.labels(), std::move(out));
}

double second_signal_phi_dependence(const JointSignalDistribution& p, const Tolerances& tol) {
  const std::vector<double> tphi = t_phi_marginal(p);
  const std::vector<double> pa = p.phi_marginal();
  double worst = 0.0;
  for (std::size_t t = 0; t < p.nt(); ++t) {
    for (std::size_t i = 0; i < p.nphi(); ++i) {
      if (pa[i] <= tol.mass_floor) continue;
      for (std::size_t j = i + 1; j < p.nphi(); ++j) {
        if (pa[j] <= tol.mass_floor) continue;
        worst = std::max(worst, std::abs(tphi[t * p.nphi() + i] / pa[i] - tphi[t * p.nphi() + j] / pa[j]));
      }
    }
  }
  return worst;
}

double second_signal_state_correlation(const JointSignalDistribution& p) {
  const std::vector<double> states = p.state_marginal();
  std::vector<double> pt(p.nt(), 0.0);
  std::vector<double> t_states(p.nt() * p.nphi() * p.npsi(), 0.0);
  for (std::size_t s = 0; s < p.ns(); ++s)
    for (std::size_t t = 0; t < p.nt(); ++t)
      for (std::size_t phi = 0; phi < p.nphi(); ++phi)
        for (std::size_t psi = 0; psi < p.npsi(); ++psi) {
          const double v = p(s, t, phi, psi);
          pt[t] += v;
          t_states[(t * p.nphi() + phi) * p.npsi() + psi] += v;
        }
  double worst = 0.0;
  for (std::size_t t = 0; t < p.nt(); ++t)
    for (std::size_t k = 0; k < p.nphi() * p.npsi(); ++k)
      worst = std::max(worst, std::abs(t_states[t * p.nphi() * p.npsi() + k] - pt[t] * states[k]));
  return worst;
}

PsiFreeReductionReport verify_psi_free_reduction(const Game& g, const JointSignalDistribution& p,
                                                 const Tolerances& tol) {
  if (g.num_actions_a() != p.ns() || g.num_actions_b() != p.nt() || g.num_states_a() != p.nphi() ||
      g.num_states_b() != p.npsi()) {
    throw Error(ErrorKind::ShapeMismatch, "game actions/states do not match the signal/state alphabets");
  }
  if (!g.payoff_independent_of_psi()) {
    throw Error(ErrorKind::PayoffDependsOnPsi, "payoff varies with the second player's state");
  }
  const CheckResult disjoint = check_disjoint(p, tol);
  if (!disjoint.passed) {
    throw Error(ErrorKind::NotDisjoint,
                "signals carry information about the other state (deviation " +
                    std::to_string(disjoint.max_violation) + ")");
  }
  const CheckResult consistent = check_state_consistent(p, g.prior_a(), g.prior_b(), tol);
  if (!consistent.passed) {
    throw Error(ErrorKind::NotStateConsistent, "state marginal differs from the game's priors by " +
                                                   std::to_string(consistent.max_violation));
  }

  PsiFreeReductionReport r;
  const JointSignalDistribution tilde = product_with_psi_marginal(p);
  r.payoff_original = payoff_under(g, p);
  r.payoff_transformed = payoff_under(g, tilde);
  r.payoff_difference = std::abs(r.payoff_original - r.payoff_transformed);
  r.phi_dependence = second_signal_phi_dependence(p, tol);
  r.correlation_after = second_signal_state_correlation(tilde);

  // Explicit classical generation of p~ with shared x := t:
  // p(x) p(phi) p(psi) p(s | x, phi) [t = x].
  const std::vector<double> stphi = signal_phi_marginal(p);
  const std::vector<double> tphi = t_phi_marginal(p);
  const std::vector<double> pa = p.phi_marginal();
  const std::vector<double> pb = p.psi_marginal();
  std::vector<double> pt(p.nt(), 0.0);
  for (std::size_t t = 0; t < p.nt(); ++t)
    for (std::size_t phi = 0; phi < p.nphi(); ++phi) pt[t] += tphi[t * p.nphi() + phi];
  for (std::size_t s = 0; s < p.ns(); ++s)
    for (std::size_t t = 0; t < p.nt(); ++t)
      for (std::size_t phi = 0; phi < p.nphi(); ++phi) {
        const double joint = tphi[t * p.nphi() + phi];
        const double s_given = joint > tol.mass_floor ? stphi[(s * p.nt() + t) * p.nphi() + phi] / joint : 0.0;
        for (std::size_t psi = 0; psi < p.npsi(); ++psi) {
          const double built = pt[t] * pa[phi] * pb[psi] * s_given;
          r.construction_deviation =
              std::max(r.construction_deviation, std::abs(built - tilde(s, t, phi, psi)));
        }
      }

  r.transformed = classify(tilde, g.prior_a(), g.prior_b(), tol);
  r.passed = r.payoff_difference <= 1e-10 && r.construction_deviation <= tol.lp &&
             r.transformed.verdict == Verdict::ClassicallyGenerated;
  return r;
}

}  // namespace qcoord
