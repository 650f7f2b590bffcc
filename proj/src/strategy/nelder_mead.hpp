#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace qcoord::detail {

struct SimplexSearchResult {
  std::vector<double> x;
  double value = 0.0;
  std::vector<double> trace;  // best value after each iteration
};

// Reflection-based simplex search (Nelder-Mead) that maximizes f. The best
// vertex never gets worse, so `trace` is nondecreasing.
template <class F>
SimplexSearchResult simplex_maximize(F&& f, std::vector<double> x0, double step,
                                     std::size_t max_iterations, double tolerance,
                                     bool record_trace) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  SimplexSearchResult out;

  auto sort_vertices = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
  };
  auto along = [&](std::vector<double>& dst, const std::vector<double>& from, double t) {
    // dst = centroid + t * (from - centroid)
    for (std::size_t k = 0; k < n; ++k) dst[k] = centroid[k] + t * (from[k] - centroid[k]);
  };

  sort_vertices();
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];
    if (vals[best] - vals[worst] < tolerance) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[order[i]][k];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    along(xr, pts[worst], -kReflect);
    const double fr = f(xr);
    if (fr > vals[best]) {
      along(xe, pts[worst], -kReflect * kExpand);
      const double fe = f(xe);
      if (fe > fr) {
        pts[worst] = xe;
        vals[worst] = fe;
      } else {
        pts[worst] = xr;
        vals[worst] = fr;
      }
    } else if (fr > vals[second_worst]) {
      pts[worst] = xr;
      vals[worst] = fr;
    } else {
      bool accepted = false;
      if (fr > vals[worst]) {
        along(xc, xr, kContract);
        const double fc = f(xc);
        if (fc >= fr) {
          pts[worst] = xc;
          vals[worst] = fc;
          accepted = true;
        }
      } else {
        along(xc, pts[worst], kContract);
        const double fc = f(xc);
        if (fc > vals[worst]) {
          pts[worst] = xc;
          vals[worst] = fc;
          accepted = true;
        }
      }
      if (!accepted) {
        for (std::size_t i = 1; i <= n; ++i) {
          auto& p = pts[order[i]];
          for (std::size_t k = 0; k < n; ++k) p[k] = pts[best][k] + kShrink * (p[k] - pts[best][k]);
          vals[order[i]] = f(p);
        }
      }
    }
    sort_vertices();
    if (record_trace) out.trace.push_back(vals[order.front()]);
  }

  out.x = pts[order.front()];
  out.value = vals[order.front()];
  if (record_trace && out.trace.empty()) out.trace.push_back(out.value);
  return out;
}

}  // namespace qcoord::detail
