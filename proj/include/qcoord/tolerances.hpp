#pragma once

#include <cstddef>

namespace qcoord {

/// Numerical tolerances shared by every module.
///
/// The default profile is sized for double precision on matrices of
/// dimension at most 16; `strict()` tightens everything by two orders of
/// magnitude and is meant for auditing runs.
struct Tolerances {
  double herm = 1e-9;        // max |M_ij - conj(M_ji)|
  double trace = 1e-9;       // |tr(rho) - 1|
  double povm = 1e-9;        // entrywise max |sum_i M_i - I|
  double psd = 1e-9;         // smallest admissible eigenvalue is -psd
  double prob = 1e-9;        // probability vectors sum to 1 within this
  double nosig = 1e-10;      // no-signalling marginal deviation
  double disjoint = 1e-9;    // conditional-independence deviation
  double lp = 1e-8;          // L1 residual below which the LP is feasible
  double mass_floor = 1e-12; // events at or below this mass impose no constraint

  static constexpr Tolerances standard() { return {}; }

  static constexpr Tolerances strict() {
    Tolerances t;
    t.herm = 1e-11;
    t.trace = 1e-11;
    t.povm = 1e-11;
    t.psd = 1e-11;
    t.prob = 1e-11;
    t.nosig = 1e-12;
    t.disjoint = 1e-11;
    t.lp = 1e-10;
    return t;
  }
};

/// Largest matrix dimension any quantum object may have.
inline constexpr std::size_t kMaxDim = 64;

}  // namespace qcoord
