#pragma once

#include <span>
#include <vector>

#include "qcoord/quantum/complex_matrix.hpp"
#include "qcoord/quantum/density_matrix.hpp"
#include "qcoord/quantum/measurement.hpp"
#include "qcoord/tolerances.hpp"

namespace qcoord {

/// Kronecker product: (A (x) B)(i*p + k, j*q + l) = A(i,j) B(k,l), B is p x q.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { First, Second };

/// Partial trace of an operator on H_A (x) H_B, keeping `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);

/// tr_B[rho (I (x) n)], an operator on H_A with tr(rho (M (x) n)) = tr(result M).
ComplexMatrix contract_second(const ComplexMatrix& rho, const ComplexMatrix& n, std::size_t dim_a,
                              std::size_t dim_b);

/// tr_A[rho (m (x) I)], an operator on H_B with tr(rho (m (x) N)) = tr(result N).
ComplexMatrix contract_first(const ComplexMatrix& rho, const ComplexMatrix& m, std::size_t dim_a,
                             std::size_t dim_b);

/// Born rule p_i = tr(M_i rho). Negative entries down to -tol.psd are clamped
/// to zero and the vector renormalized; anything lower throws
/// NegativeProbability.
std::vector<double> outcome_distribution(const DensityMatrix& rho, const Measurement& m,
                                         const Tolerances& tol = {});

/// Row-major table of p(i, j).
struct ProbabilityTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> p;

  double operator()(std::size_t i, std::size_t j) const { return p[i * cols + j]; }
  std::vector<double> row_marginal() const;
  std::vector<double> col_marginal() const;
};

/// p_ij = tr(rho (M_i (x) N_j)), computed without materializing M_i (x) N_j.
ProbabilityTable joint_distribution(const DensityMatrix& rho, const Measurement& m,
                                    const Measurement& n, const Tolerances& tol = {});

struct NoSignallingReport {
  double max_deviation = 0.0;
  std::vector<double> bob_marginal;  // tr(rho_B N_j)
  bool passed = true;
};

/// For each of Alice's candidate measurements, compares Bob's marginal
/// sum_i tr(rho M_i (x) N_j) against tr(rho_B N_j) and reports the largest gap.
NoSignallingReport no_signalling_check(const DensityMatrix& rho,
                                       std::span<const Measurement> alice_choices,
                                       const Measurement& bob, const Tolerances& tol = {});

}  // namespace qcoord
