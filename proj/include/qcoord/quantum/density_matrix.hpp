#pragma once

#include <span>

#include "qcoord/quantum/complex_matrix.hpp"
#include "qcoord/tolerances.hpp"

namespace qcoord {

/// A validated quantum state: Hermitian, unit trace, positive semidefinite.
///
/// Instances are immutable; the only way to obtain one is through
/// `from_matrix` or the named constructors below, all of which validate.
class DensityMatrix {
 public:
  /// Throws InvalidState if any invariant fails under `tol`.
  static DensityMatrix from_matrix(ComplexMatrix m, const Tolerances& tol = {});

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

struct BlochVector {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  double norm_squared() const noexcept { return a1 * a1 + a2 * a2 + a3 * a3; }
};

// Pauli matrices as used throughout this library. Note sigma_y carries +i in
// the upper-right entry (the transpose of the more common convention); the
// Bloch ball geometry is the same either way.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// (I + a1 sx + a2 sy + a3 sz) / 2; throws BlochNormExceeded outside the ball.
DensityMatrix qubit_from_bloch(const BlochVector& b, const Tolerances& tol = {});

/// |v><v| / <v|v>; throws ZeroVector for v = 0.
DensityMatrix pure_state(std::span<const Complex> v, const Tolerances& tol = {});

/// Projector on (|01> - |10>) / sqrt(2).
DensityMatrix singlet_state();

/// I / dim.
DensityMatrix maximally_mixed(std::size_t dim);

}  // namespace qcoord
