#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "qcoord/game/game.hpp"
#include "qcoord/quantum/density_matrix.hpp"

namespace qcoord::detail {

// Allocation-free expected payoff of a qubit angle strategy.
//
// Projectors of projective_pair are real symmetric, so tr(rho (M (x) N))
// only involves Re(rho). Only p00 needs the full four-index contraction;
// the other cells follow from the one-party marginals.
class AngleObjective {
 public:
  AngleObjective(const Game& g, const DensityMatrix& shared)
      : nphi_(g.num_states_a()), npsi_(g.num_states_b()), w_(4 * nphi_ * npsi_) {
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) re_[r * 4 + c] = shared(r, c).real();
    }
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        rho_a_[i * 2 + j] = re_[(i * 2) * 4 + j * 2] + re_[(i * 2 + 1) * 4 + j * 2 + 1];
        rho_b_[i * 2 + j] = re_[i * 4 + j] + re_[(2 + i) * 4 + 2 + j];
      }
    }
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t phi = 0; phi < nphi_; ++phi) {
          for (std::size_t psi = 0; psi < npsi_; ++psi) {
            w_[((a * 2 + b) * nphi_ + phi) * npsi_ + psi] =
                g.prior_a()[phi] * g.prior_b()[psi] * g.payoff(a, b, phi, psi);
          }
        }
      }
    }
  }

  std::size_t dims() const noexcept { return nphi_ + npsi_; }

  // angles = [angles_a..., angles_b...]
  double operator()(std::span<const double> angles) const {
    double total = 0.0;
    for (std::size_t phi = 0; phi < nphi_; ++phi) {
      const auto m = projector(angles[phi]);
      const double pa0 = contract2(rho_a_, m);
      for (std::size_t psi = 0; psi < npsi_; ++psi) {
        const auto n = projector(angles[nphi_ + psi]);
        const double pb0 = contract2(rho_b_, n);
        double p00 = 0.0;
        for (std::size_t r1 = 0; r1 < 2; ++r1) {
          for (std::size_t r2 = 0; r2 < 2; ++r2) {
            const double* row = &re_[(r1 * 2 + r2) * 4];
            for (std::size_t c1 = 0; c1 < 2; ++c1) {
              const double mc = m[c1 * 2 + r1];
              p00 += mc * (row[c1 * 2] * n[r2] + row[c1 * 2 + 1] * n[2 + r2]);
            }
          }
        }
        const double p01 = pa0 - p00;
        const double p10 = pb0 - p00;
        const double p11 = 1.0 - pa0 - pb0 + p00;
        const std::size_t cell = phi * npsi_ + psi;
        const std::size_t stride = nphi_ * npsi_;
        total += w_[cell] * p00 + w_[stride + cell] * p01 + w_[2 * stride + cell] * p10 +
                 w_[3 * stride + cell] * p11;
      }
    }
    return total;
  }

 private:
  static std::array<double, 4> projector(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * c, c * s, c * s, s * s};
  }
  static double contract2(const std::array<double, 4>& rho, const std::array<double, 4>& m) {
    return rho[0] * m[0] + rho[1] * m[2] + rho[2] * m[1] + rho[3] * m[3];
  }

  std::size_t nphi_, npsi_;
  std::array<double, 16> re_{};
  std::array<double, 4> rho_a_{};
  std::array<double, 4> rho_b_{};
  std::vector<double> w_;
};

}  // namespace qcoord::detail
