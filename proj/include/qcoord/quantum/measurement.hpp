#pragma once

#include <span>
#include <vector>

#include "qcoord/quantum/complex_matrix.hpp"
#include "qcoord/tolerances.hpp"

namespace qcoord {

/// Outcome of checking a candidate operator list against the POVM axioms.
struct PovmReport {
  double max_hermiticity_deviation = 0.0;
  double min_eigenvalue = 0.0;
  double max_completeness_deviation = 0.0;
  bool hermitian = true;
  bool positive = true;
  bool complete = true;

  bool passed() const noexcept { return hermitian && positive && complete; }
};

/// Never throws for well-shaped input; failures are carried in the report.
/// Throws DimensionMismatch if the operators are not all square of one size.
PovmReport validate_povm(std::span<const ComplexMatrix> operators, const Tolerances& tol = {});

/// Finite-outcome POVM. Operator k corresponds to outcome label k.
class Measurement {
 public:
  /// Throws InvalidMeasurement if validate_povm fails.
  static Measurement create(std::vector<ComplexMatrix> operators, const Tolerances& tol = {});

  std::size_t dim() const noexcept { return ops_.front().rows(); }
  std::size_t outcomes() const noexcept { return ops_.size(); }
  const ComplexMatrix& op(std::size_t k) const { return ops_.at(k); }
  std::span<const ComplexMatrix> operators() const noexcept { return ops_; }

 private:
  explicit Measurement(std::vector<ComplexMatrix> ops) : ops_(std::move(ops)) {}
  std::vector<ComplexMatrix> ops_;
};

/// One measurement per state of nature of the owning player. All members
/// share a dimension and an outcome count.
class MeasurementFamily {
 public:
  static MeasurementFamily create(std::vector<Measurement> members);

  std::size_t states() const noexcept { return members_.size(); }
  std::size_t dim() const noexcept { return members_.front().dim(); }
  std::size_t outcomes() const noexcept { return members_.front().outcomes(); }
  const Measurement& operator[](std::size_t state) const { return members_.at(state); }

 private:
  explicit MeasurementFamily(std::vector<Measurement> m) : members_(std::move(m)) {}
  std::vector<Measurement> members_;
};

/// Projectors on m0 = (cos t, sin t) and m1 = (-sin t, cos t).
Measurement projective_pair(double theta);

/// Rank-one projectors onto the columns of a unitary.
Measurement projective_from_basis(const ComplexMatrix& unitary, const Tolerances& tol = {});

/// Qubit angle family: member k is projective_pair(angles[k]).
MeasurementFamily angle_family(std::span<const double> angles);

}  // namespace qcoord
