#include "qcoord/lp/simplex.hpp"

#include <cmath>
#include <limits>

#include "qcoord/error.hpp"

namespace qcoord::lp {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
    case Status::IterationLimit: return "iteration-limit";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Tableau layout: rows 0..m-1 are constraints, row m is the reduced-cost
// row. Columns 0..n-1 are the original variables, n..n+m-1 the artificials,
// and the last column is the right-hand side.
class Tableau {
 public:
  Tableau(const Problem& p, const Options& o)
      : m_(p.rows), n_(p.cols), width_(p.cols + p.rows + 1), opt_(o),
        t_((m_ + 1) * width_, 0.0), basis_(m_), barred_(n_ + m_, false) {
    for (std::size_t i = 0; i < m_; ++i) {
      const double sign = p.b[i] < 0.0 ? -1.0 : 1.0;
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign * p.a[i * n_ + j];
      at(i, n_ + i) = 1.0;
      at(i, rhs()) = sign * p.b[i];
      basis_[i] = n_ + i;
    }
  }

  Status phase_one(std::size_t& iterations) {
    std::vector<double> cost(n_ + m_, 0.0);
    for (std::size_t k = 0; k < m_; ++k) cost[n_ + k] = 1.0;
    price(cost);
    const Status s = iterate(iterations);
    if (s != Status::Optimal) return s;
    if (-at(m_, rhs()) > opt_.feasibility_eps) return Status::Infeasible;

    // Drive remaining artificials out of the basis; rows where that is
    // impossible are redundant and keep a zero artificial.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (std::abs(at(i, j)) > opt_.pivot_eps) {
          pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t k = 0; k < m_; ++k) barred_[n_ + k] = true;
    return Status::Optimal;
  }

  Status phase_two(const std::vector<double>& c, std::size_t& iterations) {
    std::vector<double> cost(n_ + m_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) cost[j] = c[j];
    price(cost);
    return iterate(iterations);
  }

  std::vector<double> primal() const {
    std::vector<double> x(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = at(i, rhs());
    }
    return x;
  }

 private:
  double& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }
  std::size_t rhs() const { return width_ - 1; }

  // Reduced-cost row for `cost` given the current basis.
  void price(const std::vector<double>& cost) {
    for (std::size_t j = 0; j < width_; ++j) at(m_, j) = j < n_ + m_ ? cost[j] : 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) at(m_, j) -= cb * at(i, j);
    }
  }

  std::size_t entering(bool bland) const {
    std::size_t best = kNone;
    double best_val = -opt_.pivot_eps;
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      if (barred_[j]) continue;
      const double d = at(m_, j);
      if (d < best_val) {
        best = j;
        if (bland) return j;
        best_val = d;
      }
    }
    return best;
  }

  std::size_t leaving(std::size_t col) const {
    std::size_t best = kNone;
    double best_ratio = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      const double a = at(i, col);
      if (a <= opt_.pivot_eps) continue;
      const double ratio = at(i, rhs()) / a;
      if (best == kNone || ratio < best_ratio - 1e-15 ||
          (std::abs(ratio - best_ratio) <= 1e-15 && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t c) {
    const double inv = 1.0 / at(r, c);
    for (std::size_t j = 0; j < width_; ++j) at(r, j) *= inv;
    at(r, c) = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  Status iterate(std::size_t& iterations) {
    std::size_t degenerate = 0;
    while (true) {
      if (iterations >= opt_.max_iterations) return Status::IterationLimit;
      const std::size_t col = entering(degenerate >= opt_.degenerate_switch);
      if (col == kNone) return Status::Optimal;
      const std::size_t row = leaving(col);
      if (row == kNone) return Status::Unbounded;
      degenerate = at(row, rhs()) <= opt_.pivot_eps ? degenerate + 1 : 0;
      pivot(row, col);
      ++iterations;
    }
  }

  std::size_t m_, n_, width_;
  Options opt_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> barred_;
};

}  // namespace

Solution minimize(const Problem& problem, const Options& options) {
  if (problem.a.size() != problem.rows * problem.cols || problem.b.size() != problem.rows ||
      problem.c.size() != problem.cols) {
    throw Error(ErrorKind::DimensionMismatch, "LP data sizes do not match rows/cols");
  }
  Solution out;
  Tableau tableau(problem, options);
  out.status = tableau.phase_one(out.iterations);
  if (out.status != Status::Optimal) return out;
  out.status = tableau.phase_two(problem.c, out.iterations);
  out.x = tableau.primal();
  out.objective = 0.0;
  for (std::size_t j = 0; j < problem.cols; ++j) out.objective += problem.c[j] * out.x[j];
  return out;
}

}  // namespace qcoord::lp
