#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qcoord/error.hpp"
#include "qcoord/quantum/operations.hpp"
#include "qcoord/quantum/random.hpp"
#include "qcoord/signals/signals.hpp"

using namespace qcoord;

namespace {

const std::vector<double> kUniform2{0.5, 0.5};

void require_error(ErrorKind kind, auto&& fn) {
  try {
    fn();
    FAIL("expected ", to_string(kind));
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
  }
}

JointSignalDistribution make(std::size_t ns, std::size_t nt, std::size_t nphi, std::size_t npsi,
                             std::vector<double> p) {
  return JointSignalDistribution::create(JointSignalDistribution::index_labels(ns, nt, nphi, npsi), std::move(p));
}

JointSignalDistribution singlet_distribution() {
  return distribution_from_quantum(singlet_state(), angle_family(chsh_angles_a()), angle_family(chsh_angles_b()),
                                   kUniform2, kUniform2);
}

JointSignalDistribution shared_coin() {
  std::vector<double> p(16, 0.0);
  for (int x = 0; x < 2; ++x)
    for (int phi = 0; phi < 2; ++phi)
      for (int psi = 0; psi < 2; ++psi) p[(((phi ^ x) * 2 + (psi ^ x)) * 2 + phi) * 2 + psi] += 0.125;
  return make(2, 2, 2, 2, std::move(p));
}

JointSignalDistribution copy_psi() {
  std::vector<double> p(16, 0.0);
  for (int phi = 0; phi < 2; ++phi)
    for (int psi = 0; psi < 2; ++psi) p[((psi * 2 + 0) * 2 + phi) * 2 + psi] = 0.25;
  return make(2, 2, 2, 2, std::move(p));
}

MeasurementFamily random_family(std::size_t members, std::size_t dim, std::size_t outcomes, Rng& rng) {
  std::vector<Measurement> m;
  for (std::size_t i = 0; i < members; ++i) m.push_back(random_povm(dim, outcomes, rng));
  return MeasurementFamily::create(std::move(m));
}

struct QuantumSample {
  JointSignalDistribution p;
  std::vector<double> prior_a, prior_b;
};

QuantumSample random_quantum(Rng& rng, std::mt19937_64& prng, std::size_t da, std::size_t db, std::size_t ns,
                             std::size_t nt, std::size_t nphi, std::size_t npsi) {
  const auto rho = random_mixed_state(da * db, rng);
  auto pa = oracle::random_simplex(nphi, prng);
  auto pb = oracle::random_simplex(npsi, prng);
  auto p = distribution_from_quantum(rho, random_family(nphi, da, ns, rng), random_family(npsi, db, nt, rng), pa, pb);
  return {std::move(p), std::move(pa), std::move(pb)};
}

// Relabels every alphabet by the given permutations.
JointSignalDistribution permuted(const JointSignalDistribution& p, const std::vector<std::size_t>& ps,
                                 const std::vector<std::size_t>& pt, const std::vector<std::size_t>& pphi,
                                 const std::vector<std::size_t>& ppsi) {
  std::vector<double> out(p.values().size());
  for (std::size_t s = 0; s < p.ns(); ++s)
    for (std::size_t t = 0; t < p.nt(); ++t)
      for (std::size_t phi = 0; phi < p.nphi(); ++phi)
        for (std::size_t psi = 0; psi < p.npsi(); ++psi)
          out[p.index(ps[s], pt[t], pphi[phi], ppsi[psi])] = p(s, t, phi, psi);
  return make(p.ns(), p.nt(), p.nphi(), p.npsi(), std::move(out));
}

std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// A psi-independent payoff pi(s, t, phi) with random entries.
Game random_psi_free_game(std::size_t ns, std::size_t nt, const std::vector<double>& pa,
                          const std::vector<double>& pb, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Game::Spec spec;
  for (std::size_t i = 0; i < pa.size(); ++i) spec.states_a.push_back("p" + std::to_string(i));
  for (std::size_t i = 0; i < pb.size(); ++i) spec.states_b.push_back("q" + std::to_string(i));
  for (std::size_t i = 0; i < ns; ++i) spec.actions_a.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < nt; ++i) spec.actions_b.push_back("t" + std::to_string(i));
  spec.prior_a = pa;
  spec.prior_b = pb;
  spec.payoff.resize(ns * nt * pa.size() * pb.size());
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t t = 0; t < nt; ++t)
      for (std::size_t phi = 0; phi < pa.size(); ++phi) {
        const double v = u(rng);
        for (std::size_t psi = 0; psi < pb.size(); ++psi)
          spec.payoff[((s * nt + t) * pa.size() + phi) * pb.size() + psi] = v;
      }
  return Game::create(std::move(spec));
}

double payoff_oracle(const Game& g, const JointSignalDistribution& p) {
  double total = 0.0;
  for (std::size_t s = 0; s < p.ns(); ++s)
    for (std::size_t t = 0; t < p.nt(); ++t)
      for (std::size_t phi = 0; phi < p.nphi(); ++phi)
        for (std::size_t psi = 0; psi < p.npsi(); ++psi) total += g.payoff(s, t, phi, psi) * p(s, t, phi, psi);
  return total;
}

}  // namespace

TEST_SUITE("joint distribution") {
  TEST_CASE("create validates shape and mass") {
    require_error(ErrorKind::InvalidDistribution, [] { make(2, 2, 2, 2, std::vector<double>(15, 1.0 / 15)); });
    require_error(ErrorKind::InvalidDistribution, [] { make(1, 1, 1, 2, {0.5, 0.6}); });
    require_error(ErrorKind::InvalidDistribution, [] { make(1, 1, 1, 2, {1.5, -0.5}); });
    CHECK_NOTHROW(make(1, 1, 1, 2, {0.25, 0.75}));
  }

  TEST_CASE("singlet distribution slices follow the closed-form table") {
    const auto p = singlet_distribution();
    const auto a = chsh_angles_a(), b = chsh_angles_b();
    for (std::size_t phi = 0; phi < 2; ++phi)
      for (std::size_t psi = 0; psi < 2; ++psi) {
        const auto t = oracle::singlet_table(a[phi], b[psi]);
        for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(p(k / 2, k % 2, phi, psi) - 0.25 * t[k]) < 1e-12);
      }
  }

  TEST_CASE("maximally mixed state gives the product of priors times a quarter") {
    Rng rng = make_rng(50);
    const std::vector<double> pa{0.2, 0.8}, pb{0.3, 0.3, 0.4};
    const auto projective = [&](std::size_t members) {
      std::vector<Measurement> m;
      for (std::size_t i = 0; i < members; ++i) m.push_back(random_projective_measurement(2, rng));
      return MeasurementFamily::create(std::move(m));
    };
    const auto p = distribution_from_quantum(maximally_mixed(4), projective(2), projective(3), pa, pb);
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t phi = 0; phi < 2; ++phi)
          for (std::size_t psi = 0; psi < 3; ++psi) CHECK(std::abs(p(s, t, phi, psi) - 0.25 * pa[phi] * pb[psi]) < 1e-12);
  }

  TEST_CASE("product states give x-free product distributions") {
    Rng rng = make_rng(51);
    for (int k = 0; k < 20; ++k) {
      const auto ra = random_mixed_state(2, rng), rb = random_mixed_state(2, rng);
      const auto rho = DensityMatrix::from_matrix(tensor(ra.matrix(), rb.matrix()));
      const auto fa = random_family(2, 2, 2, rng), fb = random_family(2, 2, 3, rng);
      const auto p = distribution_from_quantum(rho, fa, fb, kUniform2, kUniform2);
      // Explicit form 1/4 p(s|phi) p(t|psi) from the local marginals.
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t t = 0; t < 3; ++t)
          for (std::size_t phi = 0; phi < 2; ++phi)
            for (std::size_t psi = 0; psi < 2; ++psi) {
              const double qa = outcome_distribution(ra, fa[phi])[s];
              const double qb = outcome_distribution(rb, fb[psi])[t];
              CHECK(std::abs(p(s, t, phi, psi) - 0.25 * qa * qb) < 1e-12);
            }
      CHECK(check_classically_generated(p).feasible);
    }
  }

  TEST_CASE("prior lengths must match the families") {
    require_error(ErrorKind::IncompatibleLabels, [] {
      distribution_from_quantum(singlet_state(), angle_family(chsh_angles_a()), angle_family(chsh_angles_b()),
                                {1.0}, kUniform2);
    });
  }

  TEST_CASE("marginals") {
    const auto p = copy_psi();
    CHECK(p.phi_marginal() == std::vector<double>{0.5, 0.5});
    CHECK(p.psi_marginal() == std::vector<double>{0.5, 0.5});
    CHECK(p.state_marginal() == std::vector<double>{0.25, 0.25, 0.25, 0.25});
  }
}

TEST_SUITE("disjointness and consistency") {
  TEST_CASE("quantum distributions are disjoint") {
    CHECK(check_disjoint(singlet_distribution()).max_violation < 1e-10);
    Rng rng = make_rng(52);
    std::mt19937_64 prng(52);
    for (int k = 0; k < 500; ++k) {
      const std::size_t da = 2 + k % 2, db = 2 + (k / 2) % 2;
      const auto q = random_quantum(rng, prng, da, db, 2 + k % 3, 2 + (k / 3) % 2, 2 + (k / 5) % 2, 2 + (k / 7) % 2);
      const auto r = check_disjoint(q.p);
      CHECK(r.passed);
      CHECK(r.max_violation < 1e-10);
      CHECK(check_state_consistent(q.p, q.prior_a, q.prior_b).passed);
    }
  }

  TEST_CASE("copying the other state is signalling with deviation one half") {
    const auto r = check_disjoint(copy_psi());
    CHECK_FALSE(r.passed);
    CHECK(r.max_violation == doctest::Approx(0.5).epsilon(1e-14));
  }

  TEST_CASE("independent uniform signals are disjoint with zero deviation") {
    const auto r = check_disjoint(make(2, 2, 2, 2, std::vector<double>(16, 1.0 / 16)));
    CHECK(r.passed);
    CHECK(r.max_violation == 0.0);
  }

  TEST_CASE("null events impose no constraint") {
    // phi = 1 never occurs.
    std::vector<double> p(16, 0.0);
    p[((0 * 2 + 0) * 2 + 0) * 2 + 0] = 0.5;
    p[((1 * 2 + 1) * 2 + 0) * 2 + 1] = 0.5;
    CHECK_FALSE(check_disjoint(make(2, 2, 2, 2, p)).passed);
    std::vector<double> q(16, 0.0);
    q[((0 * 2 + 0) * 2 + 0) * 2 + 0] = 0.25;
    q[((0 * 2 + 1) * 2 + 0) * 2 + 1] = 0.25;
    q[((1 * 2 + 0) * 2 + 0) * 2 + 0] = 0.25;
    q[((1 * 2 + 1) * 2 + 0) * 2 + 1] = 0.25;
    CHECK(check_disjoint(make(2, 2, 2, 2, q)).passed);
  }

  TEST_CASE("state consistency") {
    CHECK(check_state_consistent(singlet_distribution(), kUniform2, kUniform2).passed);
    std::vector<double> p(16, 0.0);
    for (std::size_t s = 0; s < 2; ++s)
      for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t phi = 0; phi < 2; ++phi)
          for (std::size_t psi = 0; psi < 2; ++psi)
            p[((s * 2 + t) * 2 + phi) * 2 + psi] = (phi == 0 ? 0.6 : 0.4) * 0.5 * 0.25;
    const auto r = check_state_consistent(make(2, 2, 2, 2, p), kUniform2, kUniform2);
    CHECK_FALSE(r.passed);
    CHECK(r.max_violation == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(check_state_consistent(product_with_psi_marginal(singlet_distribution()), kUniform2, kUniform2).passed);
    require_error(ErrorKind::IncompatibleLabels, [&] { check_state_consistent(make(2, 2, 2, 2, p), {1.0}, kUniform2); });
  }
}

TEST_SUITE("classical generation") {
  TEST_CASE("uniform conditionals are feasible") {
    const auto r = check_classically_generated(make(2, 2, 2, 2, std::vector<double>(16, 1.0 / 16)));
    CHECK(r.feasible);
    CHECK(r.vertices == 16);
  }

  TEST_CASE("shared coin is feasible with two vertices") {
    const auto r = check_classically_generated(shared_coin());
    CHECK(r.feasible);
    CHECK(r.residual <= 1e-12);
    double total = 0.0;
    for (const auto& w : r.weights) total += w.weight;
    CHECK(total == doctest::Approx(1.0));
  }

  TEST_CASE("singlet distribution is infeasible and beats the classical functional") {
    const auto p = singlet_distribution();
    const auto r = check_classically_generated(p);
    CHECK_FALSE(r.feasible);
    CHECK(r.residual > 1e-6);
    const double f = oracle::chsh_functional(p);
    CHECK(f == doctest::Approx(oracle::kCos2PiOver8).epsilon(1e-12));
    CHECK(f > 0.75 + 1e-6);
  }

  TEST_CASE("no vertex beats the functional bound") {
    // Every deterministic response pair scores at most 0.75 on the functional.
    for (int fa = 0; fa < 4; ++fa)
      for (int fb = 0; fb < 4; ++fb) {
        std::vector<double> p(16, 0.0);
        for (int phi = 0; phi < 2; ++phi)
          for (int psi = 0; psi < 2; ++psi) p[((((fa >> phi) & 1) * 2 + ((fb >> psi) & 1)) * 2 + phi) * 2 + psi] = 0.25;
        CHECK(oracle::chsh_functional(make(2, 2, 2, 2, p)) <= 0.75 + 1e-15);
      }
  }

  TEST_CASE("feasible weights reconstruct the conditionals") {
    std::mt19937_64 rng(53);
    Rng qrng = make_rng(53);
    for (int k = 0; k < 100; ++k) {
      const auto p = k % 2 == 0 ? oracle::random_local_construction(rng, 2, 2, 2, 2, 1 + k % 5).distribution()
                                : random_quantum(qrng, rng, 2, 2, 2, 2, 2, 2).p;
      const auto r = check_classically_generated(p);
      if (!r.feasible) continue;
      const auto pa = p.phi_marginal(), pb = p.psi_marginal();
      std::vector<double> rebuilt(16, 0.0);
      for (const auto& w : r.weights)
        for (std::size_t phi = 0; phi < 2; ++phi)
          for (std::size_t psi = 0; psi < 2; ++psi)
            rebuilt[p.index(w.response_a[phi], w.response_b[psi], phi, psi)] += w.weight;
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t t = 0; t < 2; ++t)
          for (std::size_t phi = 0; phi < 2; ++phi)
            for (std::size_t psi = 0; psi < 2; ++psi) {
              const double mass = pa[phi] * pb[psi];
              if (mass <= 1e-12) continue;
              CHECK(std::abs(rebuilt[p.index(s, t, phi, psi)] - p(s, t, phi, psi) / mass) <= 1e-8);
            }
    }
  }

  TEST_CASE("every shared-randomness construction is feasible") {
    std::mt19937_64 rng(54);
    for (int k = 0; k < 200; ++k) {
      const std::size_t ns = 2 + k % 2, nt = 2 + (k / 2) % 2, nphi = 2 + (k / 4) % 2, npsi = 2;
      const auto c = oracle::random_local_construction(rng, ns, nt, nphi, npsi, 1 + k % 7);
      const auto r = check_classically_generated(c.distribution());
      CHECK(r.feasible);
      CHECK(r.residual <= 1e-8);
    }
  }

  TEST_CASE("state-inconsistent input is rejected") {
    std::vector<double> p(16, 0.0);
    p[0] = 0.5;
    p[((1 * 2 + 1) * 2 + 1) * 2 + 1] = 0.5;
    require_error(ErrorKind::NotStateConsistent, [&] { check_classically_generated(make(2, 2, 2, 2, p)); });
  }

  TEST_CASE("vertex count cap") {
    // 4^5 * 4^5 vertices exceed the cap.
    std::vector<double> p(4 * 4 * 5 * 5, 1.0 / (4 * 4 * 5 * 5));
    require_error(ErrorKind::AlphabetTooLarge, [&] { check_classically_generated(make(4, 4, 5, 5, p)); });
  }
}

TEST_SUITE("classify") {
  TEST_CASE("verdicts on the reference distributions") {
    CHECK(classify(singlet_distribution(), kUniform2, kUniform2).verdict == Verdict::Entangled);
    CHECK(classify(shared_coin(), kUniform2, kUniform2).verdict == Verdict::ClassicallyGenerated);
    const auto sig = classify(copy_psi(), kUniform2, kUniform2);
    CHECK(sig.verdict == Verdict::Signalling);
    CHECK(sig.disjoint.max_violation == doctest::Approx(0.5));
    CHECK(to_string(Verdict::Entangled) == "Entangled");
  }

  TEST_CASE("verdicts are stable under relabelling") {
    std::mt19937_64 rng(55);
    Rng qrng = make_rng(55);
    std::vector<JointSignalDistribution> cases{singlet_distribution(), shared_coin(), copy_psi()};
    for (int k = 0; k < 20; ++k) {
      cases.push_back(random_quantum(qrng, rng, 2, 2, 2, 2, 2, 2).p);
      cases.push_back(oracle::random_local_construction(rng, 2, 3, 2, 2, 3).distribution());
    }
    for (const auto& p : cases) {
      const auto base = classify(p, p.phi_marginal(), p.psi_marginal());
      for (int k = 0; k < 5; ++k) {
        const auto q = permuted(p, random_permutation(p.ns(), rng), random_permutation(p.nt(), rng),
                                random_permutation(p.nphi(), rng), random_permutation(p.npsi(), rng));
        const auto r = classify(q, q.phi_marginal(), q.psi_marginal());
        CHECK(r.verdict == base.verdict);
        CHECK(std::abs(r.classical.residual - base.classical.residual) < 1e-9);
      }
    }
  }
}

TEST_SUITE("psi-free reduction") {
  TEST_CASE("transform preserves the first marginal and decouples t") {
    std::mt19937_64 rng(56);
    Rng qrng = make_rng(56);
    for (int k = 0; k < 100; ++k) {
      const auto q = random_quantum(qrng, rng, 2, 2 + k % 2, 2, 2 + k % 2, 2 + k % 3, 2 + k % 2);
      const auto& p = q.p;
      const auto tilde = product_with_psi_marginal(p);
      for (std::size_t s = 0; s < p.ns(); ++s)
        for (std::size_t t = 0; t < p.nt(); ++t)
          for (std::size_t phi = 0; phi < p.nphi(); ++phi) {
            double a = 0.0, b = 0.0;
            for (std::size_t psi = 0; psi < p.npsi(); ++psi) {
              a += p(s, t, phi, psi);
              b += tilde(s, t, phi, psi);
            }
            CHECK(std::abs(a - b) < 1e-12);
          }
      CHECK(second_signal_state_correlation(tilde) < 1e-12);
      CHECK(second_signal_phi_dependence(p) < 1e-10);
      const auto twice = product_with_psi_marginal(tilde);
      for (std::size_t i = 0; i < tilde.values().size(); ++i)
        CHECK(std::abs(twice.values()[i] - tilde.values()[i]) < 1e-12);
      CHECK(check_state_consistent(tilde, q.prior_a, q.prior_b).passed);
    }
  }

  TEST_CASE("singlet distribution: t independent of both states after the transform") {
    const auto tilde = product_with_psi_marginal(singlet_distribution());
    for (std::size_t t = 0; t < 2; ++t)
      for (std::size_t phi = 0; phi < 2; ++phi)
        for (std::size_t psi = 0; psi < 2; ++psi) {
          const double joint = tilde(0, t, phi, psi) + tilde(1, t, phi, psi);
          CHECK(std::abs(joint - 0.5 * 0.25) < 1e-12);
        }
  }

  TEST_CASE("signalling distributions show phi dependence of t") {
    // t copies phi.
    std::vector<double> p(16, 0.0);
    for (std::size_t phi = 0; phi < 2; ++phi)
      for (std::size_t psi = 0; psi < 2; ++psi) p[((0 * 2 + phi) * 2 + phi) * 2 + psi] = 0.25;
    CHECK(second_signal_phi_dependence(make(2, 2, 2, 2, p)) == doctest::Approx(1.0));
  }

  TEST_CASE("reduction on the psi-free coordination game") {
    const Game g = chsh_psi_free_game();
    const auto p = singlet_distribution();
    const auto r = verify_psi_free_reduction(g, p);
    CHECK(r.passed);
    CHECK(std::abs(r.payoff_original - payoff_oracle(g, p)) < 1e-12);
    CHECK(std::abs(r.payoff_transformed - payoff_oracle(g, product_with_psi_marginal(p))) < 1e-12);
    CHECK(r.payoff_difference < 1e-10);
    CHECK(r.transformed.verdict == Verdict::ClassicallyGenerated);
    // The x := t construction reproduces the transform.
    const auto built = oracle::x_equals_t_construction(p);
    const auto tilde = product_with_psi_marginal(p);
    for (std::size_t i = 0; i < built.size(); ++i) CHECK(std::abs(built[i] - tilde.values()[i]) < 1e-12);
    CHECK(r.construction_deviation < 1e-12);
  }

  TEST_CASE("already classical input and constant payoff") {
    Game::Spec spec{{"0", "1"}, {"0", "1"}, kUniform2, kUniform2, {"0", "1"}, {"0", "1"}, std::vector<double>(16, 0.3)};
    const Game g = Game::create(spec);
    const auto r = verify_psi_free_reduction(g, shared_coin());
    CHECK(r.passed);
    CHECK(r.payoff_original == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(r.payoff_transformed == doctest::Approx(0.3).epsilon(1e-14));
  }

  TEST_CASE("random psi-free payoffs on quantum distributions") {
    std::mt19937_64 rng(57);
    Rng qrng = make_rng(57);
    for (int k = 0; k < 100; ++k) {
      const auto q = random_quantum(qrng, rng, 2, 2, 2, 2 + k % 2, 2, 2 + k % 2);
      const Game g = random_psi_free_game(q.p.ns(), q.p.nt(), q.prior_a, q.prior_b, rng);
      const auto r = verify_psi_free_reduction(g, q.p);
      CHECK(r.passed);
      CHECK(std::abs(payoff_oracle(g, q.p) - payoff_oracle(g, product_with_psi_marginal(q.p))) < 1e-10);
      CHECK(r.transformed.verdict == Verdict::ClassicallyGenerated);
    }
  }

  TEST_CASE("precondition errors") {
    require_error(ErrorKind::PayoffDependsOnPsi, [] { verify_psi_free_reduction(chsh_game(), singlet_distribution()); });
    require_error(ErrorKind::NotDisjoint, [] { verify_psi_free_reduction(chsh_psi_free_game(), copy_psi()); });
    require_error(ErrorKind::ShapeMismatch,
                  [] { verify_psi_free_reduction(chsh_psi_free_game(), make(2, 2, 2, 1, std::vector<double>(8, 0.125))); });
    Game::Spec spec{{"0", "1"}, {"0", "1"}, {0.25, 0.75}, kUniform2, {"0", "1"}, {"0", "1"}, std::vector<double>(16, 1.0)};
    require_error(ErrorKind::NotStateConsistent,
                  [&] { verify_psi_free_reduction(Game::create(spec), singlet_distribution()); });
  }
}
