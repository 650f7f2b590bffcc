#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcoord/game/game.hpp"
#include "qcoord/quantum/density_matrix.hpp"
#include "qcoord/quantum/measurement.hpp"
#include "qcoord/tolerances.hpp"

namespace qcoord {

/// Joint law p(s, t, phi, psi) of the two signals and the two states of
/// nature, stored flat in [s][t][phi][psi] order.
class JointSignalDistribution {
 public:
  struct Labels {
    std::vector<std::string> s;
    std::vector<std::string> t;
    std::vector<std::string> phi;
    std::vector<std::string> psi;
  };

  /// Throws InvalidDistribution for wrong size, negative or non-finite
  /// entries, or total mass further than tol.prob from 1.
  static JointSignalDistribution create(Labels labels, std::vector<double> p,
                                        const Tolerances& tol = {});

  /// Labels "0", "1", ... for every axis.
  static Labels index_labels(std::size_t ns, std::size_t nt, std::size_t nphi, std::size_t npsi);

  std::size_t ns() const noexcept { return labels_.s.size(); }
  std::size_t nt() const noexcept { return labels_.t.size(); }
  std::size_t nphi() const noexcept { return labels_.phi.size(); }
  std::size_t npsi() const noexcept { return labels_.psi.size(); }
  const Labels& labels() const noexcept { return labels_; }
  const std::vector<double>& values() const noexcept { return p_; }

  std::size_t index(std::size_t s, std::size_t t, std::size_t phi, std::size_t psi) const noexcept {
    return ((s * nt() + t) * nphi() + phi) * npsi() + psi;
  }
  double operator()(std::size_t s, std::size_t t, std::size_t phi, std::size_t psi) const {
    return p_[index(s, t, phi, psi)];
  }

  std::vector<double> phi_marginal() const;
  std::vector<double> psi_marginal() const;
  /// p(phi, psi), row-major [phi][psi].
  std::vector<double> state_marginal() const;

 private:
  JointSignalDistribution(Labels l, std::vector<double> p) : labels_(std::move(l)), p_(std::move(p)) {}
  Labels labels_;
  std::vector<double> p_;
};

/// p(s,t,phi,psi) = prior_a(phi) prior_b(psi) tr(rho M_{s|phi} (x) N_{t|psi}).
/// Signal labels default to outcome indices, state labels to indices.
JointSignalDistribution distribution_from_quantum(const DensityMatrix& rho,
                                                  const MeasurementFamily& family_a,
                                                  const MeasurementFamily& family_b,
                                                  const std::vector<double>& prior_a,
                                                  const std::vector<double>& prior_b,
                                                  const Tolerances& tol = {});

struct CheckResult {
  bool passed = true;
  double max_violation = 0.0;
};

/// Pr{psi | phi, s} = Pr{psi | phi} and Pr{phi | psi, t} = Pr{phi | psi} on
/// every conditioning event with mass above tol.mass_floor.
CheckResult check_disjoint(const JointSignalDistribution& p, const Tolerances& tol = {});

/// The (phi, psi) marginal equals prior_a (x) prior_b cellwise within tol.prob.
/// Throws IncompatibleLabels when the prior lengths differ from the state counts.
CheckResult check_state_consistent(const JointSignalDistribution& p,
                                   const std::vector<double>& prior_a,
                                   const std::vector<double>& prior_b, const Tolerances& tol = {});

/// One deterministic local response pair: A answers signal response_a[phi],
/// B answers response_b[psi].
struct VertexWeight {
  std::vector<std::size_t> response_a;
  std::vector<std::size_t> response_b;
  double weight = 0.0;
};

struct ClassicalGenerationResult {
  bool feasible = false;
  double residual = 0.0;             // minimized L1 reconstruction error
  std::vector<VertexWeight> weights; // nonzero weights, largest first
  std::size_t vertices = 0;
};

inline constexpr double kMaxVertices = 1e5;

/// Decides whether the conditionals p(s, t | phi, psi) lie in the local
/// polytope, the convex hull of deterministic response pairs.
///
/// A shared variable x independent of the states, with s and t depending on
/// (phi, x) and (psi, x) respectively, generates exactly this convex set for
/// finite alphabets: condition on x, then split any randomness in
/// p(s | x, phi) into deterministic responses. So x may range over response
/// pairs without loss of generality.
///
/// Solved as an LP minimizing the L1 distance between the conditionals and
/// sum_v q_v D_v over the simplex of weights q. Feasible iff the minimum is
/// at most tol.lp. Conditioning events with mass at or below
/// tol.mass_floor contribute no rows.
///
/// Throws NotStateConsistent when the (phi, psi) marginal is not the
/// product of its own marginals, AlphabetTooLarge above kMaxVertices.
ClassicalGenerationResult check_classically_generated(const JointSignalDistribution& p,
                                                      const Tolerances& tol = {});

enum class Verdict { Signalling, ClassicallyGenerated, Entangled };

std::string_view to_string(Verdict v);

struct ClassificationResult {
  CheckResult disjoint;
  CheckResult state_consistent;
  ClassicalGenerationResult classical;
  Verdict verdict = Verdict::Signalling;
};

/// Signalling iff not disjoint; otherwise ClassicallyGenerated or Entangled
/// by the local-polytope test. The polytope test runs on the conditionals
/// even when the state marginal disagrees with the priors; that mismatch is
/// reported in state_consistent only.
ClassificationResult classify(const JointSignalDistribution& p, const std::vector<double>& prior_a,
                              const std::vector<double>& prior_b, const Tolerances& tol = {});

/// p~(s,t,phi,psi) = p(s,t,phi) p(psi): the product of the (s,t,phi)
/// marginal with the psi marginal.
JointSignalDistribution product_with_psi_marginal(const JointSignalDistribution& p);

/// max over t and phi1, phi2 of |p(t | phi1) - p(t | phi2)|, on phi with mass
/// above tol.mass_floor. Zero for any disjoint distribution.
double second_signal_phi_dependence(const JointSignalDistribution& p, const Tolerances& tol = {});

/// max over (t, phi, psi) of |p(t, phi, psi) - p(t) p(phi, psi)|.
double second_signal_state_correlation(const JointSignalDistribution& p);

struct PsiFreeReductionReport {
  double payoff_original = 0.0;     // sum pi(s,t,phi) p(s,t,phi,psi)
  double payoff_transformed = 0.0;  // same sum under product_with_psi_marginal(p)
  double payoff_difference = 0.0;
  double phi_dependence = 0.0;      // second_signal_phi_dependence(p)
  double correlation_after = 0.0;   // second_signal_state_correlation(p~)
  double construction_deviation = 0.0;  // p~ vs. the explicit x := t construction
  ClassificationResult transformed;
  bool passed = false;
};

/// For a payoff that ignores psi, replaces p by the product of its
/// (s,t,phi) marginal and psi marginal and checks that (i) expected payoff
/// is unchanged and (ii) the replacement is classically generated, both by
/// the LP and by the explicit construction with shared variable x := t.
///
/// Signals are identified with actions: the game's action lists index s
/// and t. Throws PayoffDependsOnPsi, NotDisjoint, NotStateConsistent (with
/// respect to the game's priors) or ShapeMismatch.
PsiFreeReductionReport verify_psi_free_reduction(const Game& g, const JointSignalDistribution& p,
                                                 const Tolerances& tol = {});

}  // namespace qcoord
