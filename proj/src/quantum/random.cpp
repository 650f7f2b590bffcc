#include "qcoord/quantum/random.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace qcoord {
namespace {

Eigen::MatrixXcd gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    }
  }
  return out;
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

std::vector<Complex> random_unit_vector(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  for (auto& z : v) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = Complex(re, im);
    norm2 += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm2);
  return v;
}

DensityMatrix random_pure_state(std::size_t dim, Rng& rng) {
  const auto v = random_unit_vector(dim, rng);
  return pure_state(v);
}

DensityMatrix random_mixed_state(std::size_t dim, Rng& rng) {
  const Eigen::MatrixXcd g = gaussian_matrix(dim, dim, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix::from_matrix(from_eigen(rho));
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  const Eigen::MatrixXcd g = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return from_eigen(q);
}

Measurement random_projective_measurement(std::size_t dim, Rng& rng) {
  return projective_from_basis(random_unitary(dim, rng));
}

Measurement random_povm(std::size_t dim, std::size_t outcomes, Rng& rng) {
  std::vector<Eigen::MatrixXcd> parts;
  parts.reserve(outcomes);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < outcomes; ++k) {
    const Eigen::MatrixXcd g = gaussian_matrix(dim, dim, rng);
    parts.push_back(g * g.adjoint());
    sum += parts.back();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sum);
  const Eigen::MatrixXcd inv_sqrt = solver.operatorInverseSqrt();
  std::vector<ComplexMatrix> ops;
  ops.reserve(outcomes);
  for (const auto& a : parts) {
    Eigen::MatrixXcd e = inv_sqrt * a * inv_sqrt;
    e = 0.5 * (e + e.adjoint()).eval();
    ops.push_back(from_eigen(e));
  }
  return Measurement::create(std::move(ops));
}

}  // namespace qcoord
