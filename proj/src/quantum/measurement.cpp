#include "qcoord/quantum/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcoord/error.hpp"

namespace qcoord {

PovmReport validate_povm(std::span<const ComplexMatrix> operators, const Tolerances& tol) {
  PovmReport report;
  if (operators.empty()) {
    report.complete = false;
    report.max_completeness_deviation = 1.0;
    return report;
  }
  const std::size_t dim = operators.front().rows();
  ComplexMatrix sum(dim, dim);
  report.min_eigenvalue = 0.0;
  bool first = true;
  for (const auto& op : operators) {
    if (op.rows() != dim || op.cols() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "POVM operators must share one square shape");
    }
    report.max_hermiticity_deviation =
        std::max(report.max_hermiticity_deviation, hermiticity_deviation(op));
    const double lo = min_eigenvalue(op);
    report.min_eigenvalue = first ? lo : std::min(report.min_eigenvalue, lo);
    first = false;
    sum += op;
  }
  report.max_completeness_deviation = max_abs_diff(sum, ComplexMatrix::identity(dim));
  report.hermitian = report.max_hermiticity_deviation <= tol.herm;
  report.positive = report.min_eigenvalue >= -tol.psd;
  report.complete = report.max_completeness_deviation <= tol.povm;
  return report;
}

Measurement Measurement::create(std::vector<ComplexMatrix> operators, const Tolerances& tol) {
  const PovmReport r = validate_povm(operators, tol);
  if (!r.passed()) {
    throw Error(ErrorKind::InvalidMeasurement,
                "hermiticity " + std::to_string(r.max_hermiticity_deviation) + ", min eigenvalue " +
                    std::to_string(r.min_eigenvalue) + ", completeness " +
                    std::to_string(r.max_completeness_deviation));
  }
  return Measurement(std::move(operators));
}

MeasurementFamily MeasurementFamily::create(std::vector<Measurement> members) {
  if (members.empty()) {
    throw Error(ErrorKind::IncompatibleLabels, "measurement family needs at least one state");
  }
  for (const auto& m : members) {
    if (m.dim() != members.front().dim() || m.outcomes() != members.front().outcomes()) {
      throw Error(ErrorKind::IncompatibleLabels,
                  "family members must share dimension and outcome count");
    }
  }
  return MeasurementFamily(std::move(members));
}

Measurement projective_pair(double theta) {
  if (!std::isfinite(theta)) throw Error(ErrorKind::NonFinite, "angle is not finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  ComplexMatrix p0{{c * c, c * s}, {c * s, s * s}};
  ComplexMatrix p1{{s * s, -c * s}, {-c * s, c * c}};
  return Measurement::create({std::move(p0), std::move(p1)});
}

Measurement projective_from_basis(const ComplexMatrix& unitary, const Tolerances& tol) {
  if (!unitary.is_square()) throw Error(ErrorKind::DimensionMismatch, "basis must be square");
  const std::size_t n = unitary.rows();
  std::vector<ComplexMatrix> ops;
  ops.reserve(n);
  std::vector<Complex> col(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) col[i] = unitary(i, k);
    ops.push_back(ComplexMatrix::outer(col, col));
  }
  return Measurement::create(std::move(ops), tol);
}

MeasurementFamily angle_family(std::span<const double> angles) {
  std::vector<Measurement> members;
  members.reserve(angles.size());
  for (double t : angles) members.push_back(projective_pair(t));
  return MeasurementFamily::create(std::move(members));
}

}  // namespace qcoord
