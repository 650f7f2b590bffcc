#pragma once

// Independent reference computations for tests. Nothing here calls the
// library routine it is used to check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qcoord/game/game.hpp"
#include "qcoord/quantum/complex_matrix.hpp"
#include "qcoord/signals/signals.hpp"

namespace oracle {

using qcoord::Complex;
using qcoord::ComplexMatrix;

inline const double kCos2PiOver8 = (2.0 + std::numbers::sqrt2) / 4.0;

// Kronecker product written from the block definition.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  return out;
}

inline Complex trace(const ComplexMatrix& m) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

// tr(rho (M (x) N)) with the product materialized.
inline double born_product(const ComplexMatrix& rho, const ComplexMatrix& m, const ComplexMatrix& n) {
  return trace(matmul(rho, kron(m, n))).real();
}

// Closed-form singlet table at angle difference d = theta2 - theta1.
inline std::vector<double> singlet_table(double theta1, double theta2) {
  const double d = theta2 - theta1;
  const double s2 = 0.5 * std::sin(d) * std::sin(d);
  const double c2 = 0.5 * std::cos(d) * std::cos(d);
  return {s2, c2, c2, s2};
}

// Success functional of the coordination game evaluated on a joint
// distribution with binary signals read as actions. Every classically
// generated distribution scores at most 0.75.
inline double chsh_functional(const qcoord::JointSignalDistribution& p) {
  double total = 0.0;
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t)
      for (std::size_t phi = 0; phi < 2; ++phi)
        for (std::size_t psi = 0; psi < 2; ++psi) {
          const bool same = phi == 1 && psi == 0;
          const bool win = same ? s == t : s != t;
          if (win) total += p(s, t, phi, psi);
        }
  return total;
}

// Classical value by brute force over all 2^2 x 2^2 strategies of a binary
// game with two states per player, written out without the library's
// enumeration order.
inline double brute_force_classical(const qcoord::Game& g) {
  double best = -1e300;
  const std::size_t na = g.num_actions_a(), nb = g.num_actions_b();
  const std::size_t sa = g.num_states_a(), sb = g.num_states_b();
  std::size_t count_a = 1, count_b = 1;
  for (std::size_t i = 0; i < sa; ++i) count_a *= na;
  for (std::size_t i = 0; i < sb; ++i) count_b *= nb;
  for (std::size_t ia = 0; ia < count_a; ++ia) {
    for (std::size_t ib = 0; ib < count_b; ++ib) {
      double v = 0.0;
      std::size_t ca = ia;
      for (std::size_t phi = 0; phi < sa; ++phi, ca /= na) {
        std::size_t cb = ib;
        for (std::size_t psi = 0; psi < sb; ++psi, cb /= nb) {
          v += g.prior_a()[phi] * g.prior_b()[psi] * g.payoff(ca % na, cb % nb, phi, psi);
        }
      }
      best = std::max(best, v);
    }
  }
  return best;
}

// p(s,t,phi,psi) = prior_a(phi) prior_b(psi) sum_x w(x) [s = fa(phi,x)] [t = fb(psi,x)]
// for random response functions and random weights over nx hidden values.
struct LocalConstruction {
  std::size_t ns, nt, nphi, npsi, nx;
  std::vector<double> w;
  std::vector<std::size_t> fa;  // fa[x * nphi + phi]
  std::vector<std::size_t> fb;  // fb[x * npsi + psi]
  std::vector<double> prior_a, prior_b;

  qcoord::JointSignalDistribution distribution() const {
    std::vector<double> p(ns * nt * nphi * npsi, 0.0);
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t phi = 0; phi < nphi; ++phi)
        for (std::size_t psi = 0; psi < npsi; ++psi) {
          const std::size_t s = fa[x * nphi + phi], t = fb[x * npsi + psi];
          p[((s * nt + t) * nphi + phi) * npsi + psi] += w[x] * prior_a[phi] * prior_b[psi];
        }
    return qcoord::JointSignalDistribution::create(
        qcoord::JointSignalDistribution::index_labels(ns, nt, nphi, npsi), std::move(p));
  }
};

inline std::vector<double> random_simplex(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> v(n);
  double total = 0.0;
  for (double& x : v) total += (x = e(rng));
  for (double& x : v) x /= total;
  return v;
}

inline LocalConstruction random_local_construction(std::mt19937_64& rng, std::size_t ns, std::size_t nt,
                                                   std::size_t nphi, std::size_t npsi, std::size_t nx) {
  LocalConstruction c{ns, nt, nphi, npsi, nx, random_simplex(nx, rng), {}, {}, random_simplex(nphi, rng),
                      random_simplex(npsi, rng)};
  std::uniform_int_distribution<std::size_t> ds(0, ns - 1), dt(0, nt - 1);
  for (std::size_t i = 0; i < nx * nphi; ++i) c.fa.push_back(ds(rng));
  for (std::size_t i = 0; i < nx * npsi; ++i) c.fb.push_back(dt(rng));
  return c;
}

// The shared-variable construction x := t for a psi-independent payoff:
// given x = t (drawn from p(t)), A draws s from p(s | t, phi) and B reports
// t, independently of psi. Returns p(t) p(phi) p(psi) p(s | t, phi).
inline std::vector<double> x_equals_t_construction(const qcoord::JointSignalDistribution& p) {
  const std::size_t ns = p.ns(), nt = p.nt(), nphi = p.nphi(), npsi = p.npsi();
  std::vector<double> pt(nt, 0.0), pphi(nphi, 0.0), ppsi(npsi, 0.0), ptphi(nt * nphi, 0.0),
      pstphi(ns * nt * nphi, 0.0);
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t t = 0; t < nt; ++t)
      for (std::size_t phi = 0; phi < nphi; ++phi)
        for (std::size_t psi = 0; psi < npsi; ++psi) {
          const double v = p(s, t, phi, psi);
          pt[t] += v;
          pphi[phi] += v;
          ppsi[psi] += v;
          ptphi[t * nphi + phi] += v;
          pstphi[(s * nt + t) * nphi + phi] += v;
        }
  std::vector<double> out(ns * nt * nphi * npsi, 0.0);
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t t = 0; t < nt; ++t)
      for (std::size_t phi = 0; phi < nphi; ++phi)
        for (std::size_t psi = 0; psi < npsi; ++psi) {
          const double m = ptphi[t * nphi + phi];
          const double cond = m > 0.0 ? pstphi[(s * nt + t) * nphi + phi] / m : 0.0;
          out[((s * nt + t) * nphi + phi) * npsi + psi] = pt[t] * pphi[phi] * ppsi[psi] * cond;
        }
  return out;
}

}  // namespace oracle
