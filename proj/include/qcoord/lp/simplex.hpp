#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace qcoord::lp {

/// minimize c^T x  subject to  A x = b,  x >= 0.
/// A is dense row-major with `rows` x `cols` entries.
struct Problem {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;
  std::vector<double> b;
  std::vector<double> c;
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

std::string_view to_string(Status s);

struct Solution {
  Status status = Status::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
};

struct Options {
  double pivot_eps = 1e-11;        // entries smaller than this are treated as zero
  double feasibility_eps = 1e-9;   // phase-1 optimum above this means infeasible
  std::size_t max_iterations = 1000000;
  std::size_t degenerate_switch = 50;  // consecutive degenerate pivots before Bland's rule
};

/// Two-phase primal simplex on a dense tableau. Dantzig pricing, falling
/// back to Bland's rule after a run of degenerate pivots so cycling cannot
/// occur. Reentrant; holds no state between calls.
Solution minimize(const Problem& problem, const Options& options = {});

}  // namespace qcoord::lp
