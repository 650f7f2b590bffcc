#include "qcoord/quantum/density_matrix.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qcoord/error.hpp"

namespace qcoord {

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m, const Tolerances& tol) {
  if (!m.is_square() || m.rows() == 0) {
    throw Error(ErrorKind::InvalidState, "density matrix must be square and non-empty");
  }
  const double herm = hermiticity_deviation(m);
  if (herm > tol.herm) {
    throw Error(ErrorKind::InvalidState, "not Hermitian (deviation " + std::to_string(herm) + ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0}) > tol.trace) {
    throw Error(ErrorKind::InvalidState, "trace " + std::to_string(tr.real()) + " is not 1");
  }
  const double lo = min_eigenvalue(m);
  if (lo < -tol.psd) {
    throw Error(ErrorKind::InvalidState,
                "not positive semidefinite (min eigenvalue " + std::to_string(lo) + ")");
  }
  return DensityMatrix(std::move(m));
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix pauli_y() {
  const Complex i{0.0, 1.0};
  return {{0.0, i}, {-i, 0.0}};
}

ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

DensityMatrix qubit_from_bloch(const BlochVector& b, const Tolerances& tol) {
  if (!std::isfinite(b.norm_squared())) {
    throw Error(ErrorKind::NonFinite, "Bloch vector has non-finite components");
  }
  if (b.norm_squared() > 1.0 + tol.psd) {
    throw Error(ErrorKind::BlochNormExceeded,
                "|a|^2 = " + std::to_string(b.norm_squared()) + " exceeds 1");
  }
  ComplexMatrix m = ComplexMatrix::identity(2);
  m += b.a1 * pauli_x();
  m += b.a2 * pauli_y();
  m += b.a3 * pauli_z();
  m *= 0.5;
  return DensityMatrix::from_matrix(std::move(m), tol);
}

DensityMatrix pure_state(std::span<const Complex> v, const Tolerances& tol) {
  double norm2 = 0.0;
  for (const auto& z : v) norm2 += std::norm(z);
  if (!std::isfinite(norm2)) throw Error(ErrorKind::NonFinite, "state vector is not finite");
  if (norm2 == 0.0) throw Error(ErrorKind::ZeroVector, "cannot normalize the zero vector");
  std::vector<Complex> unit(v.begin(), v.end());
  for (auto& z : unit) z /= std::sqrt(norm2);
  return DensityMatrix::from_matrix(ComplexMatrix::outer(unit, unit), tol);
}

DensityMatrix singlet_state() {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> eta{0.0, r, -r, 0.0};
  return pure_state(eta);
}

DensityMatrix maximally_mixed(std::size_t dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityMatrix::from_matrix(std::move(m));
}

}  // namespace qcoord
