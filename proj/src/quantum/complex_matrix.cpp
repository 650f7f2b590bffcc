#include "qcoord/quantum/complex_matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "qcoord/error.hpp"
#include "qcoord/tolerances.hpp"

namespace qcoord {
namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows > kMaxDim || cols > kMaxDim) {
    throw Error(ErrorKind::DimensionTooLarge, std::to_string(rows) + "x" + std::to_string(cols) +
                                                  " exceeds the supported maximum " +
                                                  std::to_string(kMaxDim));
  }
}

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  data_.assign(rows * cols, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  check_dims(rows, cols);
  if (data_.size() != rows * cols) {
    throw Error(ErrorKind::DimensionMismatch, "entry count " + std::to_string(data_.size()) +
                                                  " does not match " + std::to_string(rows) +
                                                  "x" + std::to_string(cols));
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorKind::NonFinite, "matrix entry is NaN or infinite");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  check_dims(rows_, cols_);
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  for (const auto& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw Error(ErrorKind::NonFinite, "matrix entry is NaN or infinite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  ComplexMatrix m(ket.size(), bra.size());
  for (std::size_t i = 0; i < ket.size(); ++i) {
    for (std::size_t j = 0; j < bra.size(); ++j) m(i, j) = ket[i] * std::conj(bra[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "inner dimensions " + std::to_string(a.cols()) +
                                                  " and " + std::to_string(b.rows()));
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a, b);
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

double hermiticity_deviation(const ComplexMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  ComplexMatrix h(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  }
  return h;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "trace_of_product shapes incompatible");
  }
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  }
  return t;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  const ComplexMatrix h = hermitian_part(m);
  const auto n = static_cast<Eigen::Index>(h.rows());
  Eigen::MatrixXcd em(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      em(i, j) = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em);
  HermitianEigen out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = ComplexMatrix(h.rows(), h.cols());
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
    for (Eigen::Index i = 0; i < n; ++i) {
      out.vectors(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
          solver.eigenvectors()(i, k);
    }
  }
  return out;
}

double min_eigenvalue(const ComplexMatrix& m) {
  if (m.rows() == 0) return 0.0;
  const ComplexMatrix h = hermitian_part(m);
  const auto n = static_cast<Eigen::Index>(h.rows());
  Eigen::MatrixXcd em(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      em(i, j) = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

}  // namespace qcoord
