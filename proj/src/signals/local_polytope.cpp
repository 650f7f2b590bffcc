#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "local_polytope.hpp"
#include "qcoord/error.hpp"
#include "qcoord/lp/simplex.hpp"
#include "qcoord/signals/signals.hpp"

namespace qcoord {
namespace detail {

namespace {

void decode(std::uint64_t index, std::size_t base, std::vector<std::size_t>& out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = static_cast<std::size_t>(index % base);
    index /= base;
  }
}

}  // namespace

ClassicalGenerationResult solve_local_polytope(const JointSignalDistribution& p, const Tolerances& tol) {
  const std::size_t ns = p.ns(), nt = p.nt(), nphi = p.nphi(), npsi = p.npsi();
  const double count_a = std::pow(static_cast<double>(ns), static_cast<double>(nphi));
  const double count_b = std::pow(static_cast<double>(nt), static_cast<double>(npsi));
  if (count_a * count_b > kMaxVertices) {
    throw Error(ErrorKind::AlphabetTooLarge, std::to_string(count_a * count_b) +
                                                 " local vertices exceed the cap " +
                                                 std::to_string(kMaxVertices));
  }
  const auto va = static_cast<std::size_t>(count_a);
  const auto vb = static_cast<std::size_t>(count_b);
  const std::size_t vertices = va * vb;

  // Active conditioning events (phi, psi).
  const std::vector<double> states = p.state_marginal();
  std::vector<std::pair<std::size_t, std::size_t>> events;
  for (std::size_t phi = 0; phi < nphi; ++phi) {
    for (std::size_t psi = 0; psi < npsi; ++psi) {
      if (states[phi * npsi + psi] > tol.mass_floor) events.emplace_back(phi, psi);
    }
  }
  const std::size_t cells = events.size() * ns * nt;

  // Columns: [q_v (vertices) | u_c (cells) | w_c (cells)], rows: cells + normalization.
  lp::Problem lp;
  lp.rows = cells + 1;
  lp.cols = vertices + 2 * cells;
  lp.a.assign(lp.rows * lp.cols, 0.0);
  lp.b.assign(lp.rows, 0.0);
  lp.c.assign(lp.cols, 0.0);

  std::vector<std::vector<std::size_t>> resp_a(va, std::vector<std::size_t>(nphi));
  std::vector<std::vector<std::size_t>> resp_b(vb, std::vector<std::size_t>(npsi));
  for (std::size_t i = 0; i < va; ++i) decode(i, ns, resp_a[i]);
  for (std::size_t j = 0; j < vb; ++j) decode(j, nt, resp_b[j]);

  auto cell_row = [&](std::size_t e, std::size_t s, std::size_t t) { return (e * ns + s) * nt + t; };
  for (std::size_t e = 0; e < events.size(); ++e) {
    const auto [phi, psi] = events[e];
    const double mass = states[phi * npsi + psi];
    for (std::size_t s = 0; s < ns; ++s) {
      for (std::size_t t = 0; t < nt; ++t) {
        const std::size_t r = cell_row(e, s, t);
        lp.b[r] = p(s, t, phi, psi) / mass;
        lp.a[r * lp.cols + vertices + r] = 1.0;
        lp.a[r * lp.cols + vertices + cells + r] = -1.0;
      }
    }
    for (std::size_t i = 0; i < va; ++i) {
      for (std::size_t j = 0; j < vb; ++j) {
        const std::size_t r = cell_row(e, resp_a[i][phi], resp_b[j][psi]);
        lp.a[r * lp.cols + i * vb + j] = 1.0;
      }
    }
  }
  for (std::size_t v = 0; v < vertices; ++v) lp.a[cells * lp.cols + v] = 1.0;
  lp.b[cells] = 1.0;
  for (std::size_t k = vertices; k < lp.cols; ++k) lp.c[k] = 1.0;

  const lp::Solution sol = lp::minimize(lp);
  if (sol.status != lp::Status::Optimal) {
    throw Error(ErrorKind::InvalidDistribution,
                "local-polytope LP ended with status " + std::string(lp::to_string(sol.status)));
  }

  ClassicalGenerationResult out;
  out.vertices = vertices;
  out.residual = std::max(0.0, sol.objective);
  out.feasible = out.residual <= tol.lp;
  for (std::size_t i = 0; i < va; ++i) {
    for (std::size_t j = 0; j < vb; ++j) {
      const double w = sol.x[i * vb + j];
      if (w > 1e-15) out.weights.push_back({resp_a[i], resp_b[j], w});
    }
  }
  std::stable_sort(out.weights.begin(), out.weights.end(),
                   [](const VertexWeight& x, const VertexWeight& y) { return x.weight > y.weight; });
  return out;
}

}  // namespace detail

ClassicalGenerationResult check_classically_generated(const JointSignalDistribution& p,
                                                      const Tolerances& tol) {
  const std::vector<double> states = p.state_marginal();
  const std::vector<double> pa = p.phi_marginal();
  const std::vector<double> pb = p.psi_marginal();
  double worst = 0.0;
  for (std::size_t phi = 0; phi < p.nphi(); ++phi) {
    for (std::size_t psi = 0; psi < p.npsi(); ++psi) {
      worst = std::max(worst, std::abs(states[phi * p.npsi() + psi] - pa[phi] * pb[psi]));
    }
  }
  if (worst > tol.prob) {
    throw Error(ErrorKind::NotStateConsistent,
                "state marginal deviates from the product of its marginals by " + std::to_string(worst));
  }
  return detail::solve_local_polytope(p, tol);
}

ClassificationResult classify(const JointSignalDistribution& p, const std::vector<double>& prior_a,
                              const std::vector<double>& prior_b, const Tolerances& tol) {
  ClassificationResult r;
  r.disjoint = check_disjoint(p, tol);
  r.state_consistent = check_state_consistent(p, prior_a, prior_b, tol);
  r.classical = detail::solve_local_polytope(p, tol);
  if (!r.disjoint.passed) {
    r.verdict = Verdict::Signalling;
  } else {
    r.verdict = r.classical.feasible ? Verdict::ClassicallyGenerated : Verdict::Entangled;
  }
  return r;
}

}  // namespace qcoord
