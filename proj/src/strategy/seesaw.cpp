#include <cstdint>
#include <vector>

#include "qcoord/error.hpp"
#include "qcoord/quantum/operations.hpp"
#include "qcoord/quantum/random.hpp"
#include "qcoord/strategy/quantum_strategy.hpp"

namespace qcoord {
namespace {

// Projector onto the eigenspace of d with eigenvalue >= -zero_tol; the
// near-zero eigenvalues thereby go to outcome 0.
ComplexMatrix nonnegative_projector(const ComplexMatrix& d, double zero_tol) {
  const HermitianEigen eig = hermitian_eigen(d);
  const std::size_t n = d.rows();
  ComplexMatrix p(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] < -zero_tol) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = eig.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) p(i, j) += vi * std::conj(eig.vectors(j, k));
    }
  }
  return p;
}

struct SeesawRun {
  double value = 0.0;
  std::vector<ComplexMatrix> m0;  // m0[phi]: A's outcome-0 operator
  std::vector<ComplexMatrix> n0;  // n0[psi]: B's outcome-0 operator
  std::vector<double> trace;
};

class SeesawProblem {
 public:
  SeesawProblem(const Game& g, const DensityMatrix& shared, LocalDims dims, const Tolerances& tol)
      : g_(g), rho_(shared.matrix()), dims_(dims), zero_tol_(tol.psd),
        eye_a_(ComplexMatrix::identity(dims.a)), eye_b_(ComplexMatrix::identity(dims.b)) {}

  SeesawRun run(std::vector<ComplexMatrix> n0, std::size_t max_sweeps, double tolerance) const {
    const std::size_t nphi = g_.num_states_a();
    const std::size_t npsi = g_.num_states_b();
    SeesawRun r;
    r.n0 = std::move(n0);
    r.m0.assign(nphi, ComplexMatrix(dims_.a, dims_.a));

    std::vector<ComplexMatrix> xb(2 * npsi);  // xb[b * npsi + psi] = tr_B[rho (I (x) N_{b|psi})]
    std::vector<ComplexMatrix> ya(2 * nphi);  // ya[a * nphi + phi] = tr_A[rho (M_{a|phi} (x) I)]
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
      for (std::size_t psi = 0; psi < npsi; ++psi) {
        xb[psi] = contract_second(rho_, r.n0[psi], dims_.a, dims_.b);
        xb[npsi + psi] = contract_second(rho_, eye_b_ - r.n0[psi], dims_.a, dims_.b);
      }
      for (std::size_t phi = 0; phi < nphi; ++phi) {
        ComplexMatrix d(dims_.a, dims_.a);
        for (std::size_t psi = 0; psi < npsi; ++psi) {
          for (std::size_t b = 0; b < 2; ++b) {
            const double w = weight(0, b, phi, psi) - weight(1, b, phi, psi);
            if (w != 0.0) d += w * xb[b * npsi + psi];
          }
        }
        r.m0[phi] = nonnegative_projector(d, zero_tol_);
      }

      for (std::size_t phi = 0; phi < nphi; ++phi) {
        ya[phi] = contract_first(rho_, r.m0[phi], dims_.a, dims_.b);
        ya[nphi + phi] = contract_first(rho_, eye_a_ - r.m0[phi], dims_.a, dims_.b);
      }
      double value = 0.0;
      for (std::size_t psi = 0; psi < npsi; ++psi) {
        ComplexMatrix l0(dims_.b, dims_.b);
        ComplexMatrix l1(dims_.b, dims_.b);
        for (std::size_t phi = 0; phi < nphi; ++phi) {
          for (std::size_t a = 0; a < 2; ++a) {
            const double w0 = weight(a, 0, phi, psi);
            const double w1 = weight(a, 1, phi, psi);
            if (w0 != 0.0) l0 += w0 * ya[a * nphi + phi];
            if (w1 != 0.0) l1 += w1 * ya[a * nphi + phi];
          }
        }
        r.n0[psi] = nonnegative_projector(l0 - l1, zero_tol_);
        value += trace_of_product(r.n0[psi], l0).real() +
                 trace_of_product(eye_b_ - r.n0[psi], l1).real();
      }

      r.trace.push_back(value);
      const bool converged = sweep > 0 && value - r.value < tolerance;
      r.value = value;
      if (converged) break;
    }
    return r;
  }

 private:
  double weight(std::size_t a, std::size_t b, std::size_t phi, std::size_t psi) const {
    return g_.prior_a()[phi] * g_.prior_b()[psi] * g_.payoff(a, b, phi, psi);
  }

  const Game& g_;
  const ComplexMatrix& rho_;
  LocalDims dims_;
  double zero_tol_;
  ComplexMatrix eye_a_;
  ComplexMatrix eye_b_;
};

// Random projector of rank ceil(dim / 2) in a Haar-random basis.
ComplexMatrix random_half_projector(std::size_t dim, Rng& rng) {
  const ComplexMatrix u = random_unitary(dim, rng);
  ComplexMatrix p(dim, dim);
  for (std::size_t k = 0; k < (dim + 1) / 2; ++k) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) p(i, j) += u(i, k) * std::conj(u(j, k));
    }
  }
  return p;
}

MeasurementFamily binary_family(const std::vector<ComplexMatrix>& outcome0, std::size_t dim) {
  std::vector<Measurement> members;
  members.reserve(outcome0.size());
  const ComplexMatrix eye = ComplexMatrix::identity(dim);
  for (const auto& p : outcome0) {
    members.push_back(Measurement::create({hermitian_part(p), hermitian_part(eye - p)}));
  }
  return MeasurementFamily::create(std::move(members));
}

SeesawOptimum run_seesaw(const Game& g, const DensityMatrix& shared, const OptimizerConfig& cfg,
                         LocalDims dims, bool parallel) {
  cfg.validate();
  if (g.num_actions_a() != 2 || g.num_actions_b() != 2) {
    throw Error(ErrorKind::NonBinaryActions, "see-saw needs exactly two actions per player");
  }
  if (dims.a == 0 || dims.b == 0 || shared.dim() != dims.a * dims.b) {
    throw Error(ErrorKind::DimensionMismatch, "shared state dimension is not dims.a * dims.b");
  }
  const SeesawProblem problem(g, shared, dims, Tolerances{});
  std::vector<SeesawRun> runs(cfg.restarts);
  const auto restarts = static_cast<std::int64_t>(cfg.restarts);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t k = 0; k < restarts; ++k) {
    Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(k));
    std::vector<ComplexMatrix> n0;
    n0.reserve(g.num_states_b());
    for (std::size_t psi = 0; psi < g.num_states_b(); ++psi) n0.push_back(random_half_projector(dims.b, rng));
    runs[static_cast<std::size_t>(k)] = problem.run(std::move(n0), cfg.refinement_iterations, cfg.tolerance);
  }

  std::size_t winner = 0;
  for (std::size_t k = 1; k < runs.size(); ++k) {
    if (runs[k].value > runs[winner].value) winner = k;
  }
  auto profile = QuantumStrategyProfile::create(shared, binary_family(runs[winner].m0, dims.a),
                                                binary_family(runs[winner].n0, dims.b));
  const double value = expected_payoff(g, behavior_from_profile(profile, g));
  return SeesawOptimum{std::move(profile), value, winner, std::move(runs[winner].trace)};
}

}  // namespace

SeesawOptimum seesaw_optimize(const Game& g, const DensityMatrix& shared, const OptimizerConfig& cfg,
                              LocalDims dims) {
  return run_seesaw(g, shared, cfg, dims, /*parallel=*/true);
}

SeesawOptimum seesaw_optimize_serial(const Game& g, const DensityMatrix& shared,
                                     const OptimizerConfig& cfg, LocalDims dims) {
  return run_seesaw(g, shared, cfg, dims, /*parallel=*/false);
}

}  // namespace qcoord
