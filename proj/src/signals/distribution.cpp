#include <algorithm>
#include <cmath>
#include <string>

#include "qcoord/error.hpp"
#include "qcoord/quantum/operations.hpp"
#include "qcoord/signals/signals.hpp"

namespace qcoord {

JointSignalDistribution JointSignalDistribution::create(Labels labels, std::vector<double> p,
                                                        const Tolerances& tol) {
  const std::size_t expected =
      labels.s.size() * labels.t.size() * labels.phi.size() * labels.psi.size();
  if (expected == 0) throw Error(ErrorKind::InvalidDistribution, "every label list must be non-empty");
  if (p.size() != expected) {
    throw Error(ErrorKind::InvalidDistribution, "probability array has " + std::to_string(p.size()) +
                                                    " entries, expected " + std::to_string(expected));
  }
  double total = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorKind::InvalidDistribution, "negative or non-finite probability");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > tol.prob) {
    throw Error(ErrorKind::InvalidDistribution, "probabilities sum to " + std::to_string(total));
  }
  return JointSignalDistribution(std::move(labels), std::move(p));
}

JointSignalDistribution::Labels JointSignalDistribution::index_labels(std::size_t ns, std::size_t nt,
                                                                      std::size_t nphi,
                                                                      std::size_t npsi) {
  auto make = [](std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(i));
    return v;
  };
  return {make(ns), make(nt), make(nphi), make(npsi)};
}

std::vector<double> JointSignalDistribution::phi_marginal() const {
  std::vector<double> m(nphi(), 0.0);
  for (std::size_t s = 0; s < ns(); ++s)
    for (std::size_t t = 0; t < nt(); ++t)
      for (std::size_t phi = 0; phi < nphi(); ++phi)
        for (std::size_t psi = 0; psi < npsi(); ++psi) m[phi] += (*this)(s, t, phi, psi);
  return m;
}

std::vector<double> JointSignalDistribution::psi_marginal() const {
  std::vector<double> m(npsi(), 0.0);
  for (std::size_t s = 0; s < ns(); ++s)
    for (std::size_t t = 0; t < nt(); ++t)
      for (std::size_t phi = 0; phi < nphi(); ++phi)
        for (std::size_t psi = 0; psi < npsi(); ++psi) m[psi] += (*this)(s, t, phi, psi);
  return m;
}

std::vector<double> JointSignalDistribution::state_marginal() const {
  std::vector<double> m(nphi() * npsi(), 0.0);
  for (std::size_t s = 0; s < ns(); ++s)
    for (std::size_t t = 0; t < nt(); ++t)
      for (std::size_t phi = 0; phi < nphi(); ++phi)
        for (std::size_t psi = 0; psi < npsi(); ++psi) m[phi * npsi() + psi] += (*this)(s, t, phi, psi);
  return m;
}

JointSignalDistribution distribution_from_quantum(const DensityMatrix& rho,
                                                  const MeasurementFamily& family_a,
                                                  const MeasurementFamily& family_b,
                                                  const std::vector<double>& prior_a,
                                                  const std::vector<double>& prior_b,
                                                  const Tolerances& tol) {
  if (prior_a.size() != family_a.states() || prior_b.size() != family_b.states()) {
    throw Error(ErrorKind::IncompatibleLabels, "prior length differs from measurement family size");
  }
  const std::size_t ns = family_a.outcomes();
  const std::size_t nt = family_b.outcomes();
  const std::size_t nphi = family_a.states();
  const std::size_t npsi = family_b.states();
  std::vector<double> p(ns * nt * nphi * npsi, 0.0);
  for (std::size_t phi = 0; phi < nphi; ++phi) {
    for (std::size_t psi = 0; psi < npsi; ++psi) {
      const ProbabilityTable table = joint_distribution(rho, family_a[phi], family_b[psi], tol);
      const double w = prior_a[phi] * prior_b[psi];
      for (std::size_t s = 0; s < ns; ++s) {
        for (std::size_t t = 0; t < nt; ++t) p[((s * nt + t) * nphi + phi) * npsi + psi] = w * table(s, t);
      }
    }
  }
  return JointSignalDistribution::create(JointSignalDistribution::index_labels(ns, nt, nphi, npsi),
                                         std::move(p), tol);
}

CheckResult check_disjoint(const JointSignalDistribution& p, const Tolerances& tol) {
  const std::size_t ns = p.ns(), nt = p.nt(), nphi = p.nphi(), npsi = p.npsi();
  const std::vector<double> states = p.state_marginal();
  const std::vector<double> pa = p.phi_marginal();
  const std::vector<double> pb = p.psi_marginal();
  double worst = 0.0;

  // Pr{psi | phi, s} vs Pr{psi | phi}
  for (std::size_t phi = 0; phi < nphi; ++phi) {
    if (pa[phi] <= tol.mass_floor) continue;
    for (std::size_t s = 0; s < ns; ++s) {
      std::vector<double> joint(npsi, 0.0);
      double mass = 0.0;
      for (std::size_t psi = 0; psi < npsi; ++psi) {
        for (std::size_t t = 0; t < nt; ++t) joint[psi] += p(s, t, phi, psi);
        mass += joint[psi];
      }
      if (mass <= tol.mass_floor) continue;
      for (std::size_t psi = 0; psi < npsi; ++psi) {
        worst = std::max(worst, std::abs(joint[psi] / mass - states[phi * npsi + psi] / pa[phi]));
      }
    }
  }
  // Pr{phi | psi, t} vs Pr{phi | psi}
  for (std::size_t psi = 0; psi < npsi; ++psi) {
    if (pb[psi] <= tol.mass_floor) continue;
    for (std::size_t t = 0; t < nt; ++t) {
      std::vector<double> joint(nphi, 0.0);
      double mass = 0.0;
      for (std::size_t phi = 0; phi < nphi; ++phi) {
        for (std::size_t s = 0; s < ns; ++s) joint[phi] += p(s, t, phi, psi);
        mass += joint[phi];
      }
      if (mass <= tol.mass_floor) continue;
      for (std::size_t phi = 0; phi < nphi; ++phi) {
        worst = std::max(worst, std::abs(joint[phi] / mass - states[phi * npsi + psi] / pb[psi]));
      }
    }
  }
  return {worst <= tol.disjoint, worst};
}

CheckResult check_state_consistent(const JointSignalDistribution& p,
                                   const std::vector<double>& prior_a,
                                   const std::vector<double>& prior_b, const Tolerances& tol) {
  if (prior_a.size() != p.nphi() || prior_b.size() != p.npsi()) {
    throw Error(ErrorKind::IncompatibleLabels, "prior lengths differ from the state label counts");
  }
  const std::vector<double> states = p.state_marginal();
  double worst = 0.0;
  for (std::size_t phi = 0; phi < p.nphi(); ++phi) {
    for (std::size_t psi = 0; psi < p.npsi(); ++psi) {
      worst = std::max(worst, std::abs(states[phi * p.npsi() + psi] - prior_a[phi] * prior_b[psi]));
    }
  }
  return {worst <= tol.prob, worst};
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Signalling: return "Signalling";
    case Verdict::ClassicallyGenerated: return "ClassicallyGenerated";
    case Verdict::Entangled: return "Entangled";
  }
  return "Unknown";
}

}  // namespace qcoord
