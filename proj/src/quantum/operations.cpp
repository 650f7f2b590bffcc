#include "qcoord/quantum/operations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcoord/error.hpp"

namespace qcoord {
namespace {

// Clamp tiny negative probabilities and renormalize.
void clean_probabilities(std::vector<double>& p, const Tolerances& tol) {
  double total = 0.0;
  for (double& x : p) {
    if (x < -tol.psd) {
      throw Error(ErrorKind::NegativeProbability, "Born-rule value " + std::to_string(x));
    }
    x = std::clamp(x, 0.0, 1.0);
    total += x;
  }
  if (total <= 0.0) throw Error(ErrorKind::NegativeProbability, "probabilities sum to zero");
  for (double& x : p) x /= total;
}

}  // namespace

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  ComplexMatrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t l = 0; l < q; ++l) out(i * p + k, j * q + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  if (!m.is_square() || m.rows() != dim_a * dim_b) {
    throw Error(ErrorKind::DimensionMismatch, "operator of dimension " + std::to_string(m.rows()) +
                                                  " is not " + std::to_string(dim_a) + "x" +
                                                  std::to_string(dim_b));
  }
  if (keep == Subsystem::First) {
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t i = 0; i < dim_a; ++i) {
      for (std::size_t j = 0; j < dim_a; ++j) {
        Complex acc{};
        for (std::size_t k = 0; k < dim_b; ++k) acc += m(i * dim_b + k, j * dim_b + k);
        out(i, j) = acc;
      }
    }
    return out;
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t k = 0; k < dim_b; ++k) {
    for (std::size_t l = 0; l < dim_b; ++l) {
      Complex acc{};
      for (std::size_t i = 0; i < dim_a; ++i) acc += m(i * dim_b + k, i * dim_b + l);
      out(k, l) = acc;
    }
  }
  return out;
}

ComplexMatrix contract_second(const ComplexMatrix& rho, const ComplexMatrix& n, std::size_t dim_a,
                              std::size_t dim_b) {
  if (!rho.is_square() || rho.rows() != dim_a * dim_b || n.rows() != dim_b || n.cols() != dim_b) {
    throw Error(ErrorKind::DimensionMismatch, "contract_second shapes incompatible");
  }
  ComplexMatrix out(dim_a, dim_a);
  for (std::size_t i = 0; i < dim_a; ++i) {
    for (std::size_t j = 0; j < dim_a; ++j) {
      Complex acc{};
      for (std::size_t k = 0; k < dim_b; ++k) {
        for (std::size_t l = 0; l < dim_b; ++l) acc += rho(i * dim_b + k, j * dim_b + l) * n(l, k);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix contract_first(const ComplexMatrix& rho, const ComplexMatrix& m, std::size_t dim_a,
                             std::size_t dim_b) {
  if (!rho.is_square() || rho.rows() != dim_a * dim_b || m.rows() != dim_a || m.cols() != dim_a) {
    throw Error(ErrorKind::DimensionMismatch, "contract_first shapes incompatible");
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t k = 0; k < dim_b; ++k) {
    for (std::size_t l = 0; l < dim_b; ++l) {
      Complex acc{};
      for (std::size_t i = 0; i < dim_a; ++i) {
        for (std::size_t j = 0; j < dim_a; ++j) acc += rho(i * dim_b + k, j * dim_b + l) * m(j, i);
      }
      out(k, l) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  return DensityMatrix::from_matrix(partial_trace(rho.matrix(), dim_a, dim_b, keep));
}

std::vector<double> outcome_distribution(const DensityMatrix& rho, const Measurement& m,
                                         const Tolerances& tol) {
  if (rho.dim() != m.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "state dimension " + std::to_string(rho.dim()) +
                                                  " vs measurement dimension " +
                                                  std::to_string(m.dim()));
  }
  std::vector<double> p(m.outcomes());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = trace_of_product(m.op(i), rho.matrix()).real();
  clean_probabilities(p, tol);
  return p;
}

std::vector<double> ProbabilityTable::row_marginal() const {
  std::vector<double> out(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[i] += (*this)(i, j);
  }
  return out;
}

std::vector<double> ProbabilityTable::col_marginal() const {
  std::vector<double> out(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[j] += (*this)(i, j);
  }
  return out;
}

ProbabilityTable joint_distribution(const DensityMatrix& rho, const Measurement& m,
                                    const Measurement& n, const Tolerances& tol) {
  const std::size_t da = m.dim();
  const std::size_t db = n.dim();
  if (rho.dim() != da * db) {
    throw Error(ErrorKind::DimensionMismatch, "state dimension " + std::to_string(rho.dim()) +
                                                  " is not " + std::to_string(da) + "*" +
                                                  std::to_string(db));
  }
  ProbabilityTable table{m.outcomes(), n.outcomes(), std::vector<double>(m.outcomes() * n.outcomes())};
  const ComplexMatrix& r = rho.matrix();
  for (std::size_t i = 0; i < m.outcomes(); ++i) {
    const ComplexMatrix& mi = m.op(i);
    for (std::size_t j = 0; j < n.outcomes(); ++j) {
      const ComplexMatrix& nj = n.op(j);
      // tr(rho (M (x) N)) = sum_{row, col} rho(row, col) M(c1, r1) N(c2, r2)
      Complex acc{};
      for (std::size_t r1 = 0; r1 < da; ++r1) {
        for (std::size_t r2 = 0; r2 < db; ++r2) {
          const std::size_t row = r1 * db + r2;
          for (std::size_t c1 = 0; c1 < da; ++c1) {
            const Complex mc = mi(c1, r1);
            if (mc == Complex{}) continue;
            for (std::size_t c2 = 0; c2 < db; ++c2) {
              acc += r(row, c1 * db + c2) * mc * nj(c2, r2);
            }
          }
        }
      }
      table.p[i * table.cols + j] = acc.real();
    }
  }
  clean_probabilities(table.p, tol);
  return table;
}

NoSignallingReport no_signalling_check(const DensityMatrix& rho,
                                       std::span<const Measurement> alice_choices,
                                       const Measurement& bob, const Tolerances& tol) {
  if (alice_choices.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "at least one Alice measurement is required");
  }
  const std::size_t da = alice_choices.front().dim();
  const std::size_t db = bob.dim();
  if (rho.dim() != da * db) {
    throw Error(ErrorKind::DimensionMismatch, "state dimension does not match measurements");
  }
  const ComplexMatrix rho_b = partial_trace(rho.matrix(), da, db, Subsystem::Second);
  NoSignallingReport report;
  report.bob_marginal.resize(bob.outcomes());
  for (std::size_t j = 0; j < bob.outcomes(); ++j) {
    report.bob_marginal[j] = trace_of_product(rho_b, bob.op(j)).real();
  }
  for (const auto& alice : alice_choices) {
    if (alice.dim() != da) {
      throw Error(ErrorKind::DimensionMismatch, "Alice measurements differ in dimension");
    }
    const ProbabilityTable t = joint_distribution(rho, alice, bob, tol);
    const std::vector<double> marginal = t.col_marginal();
    for (std::size_t j = 0; j < marginal.size(); ++j) {
      report.max_deviation =
          std::max(report.max_deviation, std::abs(marginal[j] - report.bob_marginal[j]));
    }
  }
  report.passed = report.max_deviation <= tol.nosig;
  return report;
}

}  // namespace qcoord
