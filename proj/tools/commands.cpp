#include "commands.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qcoord/game/game.hpp"
#include "qcoord/io/files.hpp"
#include "qcoord/quantum/operations.hpp"
#include "qcoord/quantum/random.hpp"
#include "qcoord/strategy/quantum_strategy.hpp"
#include "report.hpp"

#ifndef QCOORD_VERSION
#define QCOORD_VERSION "0.0.0"
#endif

namespace qcoord::cli {
namespace {

const double kQuantumValue = (2.0 + std::numbers::sqrt2) / 4.0;  // cos^2(pi/8)
constexpr double kReproductionTol = 1e-10;
constexpr double kOptimizerSlack = 1e-6;

struct GlobalOptions {
  bool json = false;
  bool timing = false;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string profile = "default";

  Tolerances tolerances() const { return profile == "strict" ? Tolerances::strict() : Tolerances::standard(); }
};

struct StateOptions {
  std::string selector = "singlet";
  std::string file;
};

struct OptimizerOptions {
  std::size_t grid = OptimizerConfig{}.grid_resolution;
  std::size_t iterations = OptimizerConfig{}.refinement_iterations;
  std::size_t restarts = OptimizerConfig{}.restarts;
  double tolerance = OptimizerConfig{}.tolerance;

  OptimizerConfig config(std::uint64_t seed) const {
    OptimizerConfig c;
    c.grid_resolution = grid;
    c.refinement_iterations = iterations;
    c.restarts = restarts;
    c.tolerance = tolerance;
    c.seed = seed;
    return c;
  }
};

RunReport new_report(const std::string& command, const GlobalOptions& g) {
  RunReport r;
  r.command = command;
  r.tool_version = QCOORD_VERSION;
  r.parameters.emplace_back("seed", std::to_string(g.seed));
  r.parameters.emplace_back("tolerance_profile", g.profile);
  return r;
}

Game read_game(const std::string& path, RunReport& r, const Tolerances& tol) {
  const std::string text = io::read_file(path);
  r.add_input(path, text);
  return io::parse_game(text, tol);
}

JointSignalDistribution read_distribution(const std::string& path, RunReport& r, const Tolerances& tol) {
  const std::string text = io::read_file(path);
  r.add_input(path, text);
  return io::parse_distribution(text, tol);
}

DensityMatrix select_state(const StateOptions& s, const GlobalOptions& g, RunReport& r) {
  r.parameters.emplace_back("state", s.selector);
  if (s.selector == "singlet") return singlet_state();
  if (s.selector == "maximally-mixed") return maximally_mixed(4);
  if (s.selector == "random") {
    Rng rng = make_rng(g.seed, 0);
    return random_mixed_state(4, rng);
  }
  if (s.file.empty()) throw CLI::ValidationError("--state file requires --state-file");
  const std::string text = io::read_file(s.file);
  r.add_input(s.file, text);
  return io::parse_state(text, g.tolerances());
}

std::vector<double> select_angles(const std::string& spec, std::size_t random_count, std::uint64_t seed,
                                  std::uint64_t stream) {
  if (spec != "random") return io::parse_angle_list(spec);
  Rng rng = make_rng(seed, stream);
  std::uniform_real_distribution<double> u(0.0, std::numbers::pi);
  std::vector<double> out(random_count);
  for (double& a : out) a = u(rng);
  return out;
}

std::string format_angles(const std::vector<double>& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + format_real(a[i]);
  return s;
}

enum class Expect { Nothing, Classical, Entangled };

void add_classification(RunReport& r, const ClassificationResult& c, const Tolerances& tol,
                        const std::string& prefix = "", Expect expect = Expect::Nothing) {
  r.result(prefix + "disjoint_deviation", c.disjoint.max_violation);
  r.result(prefix + "state_consistency_deviation", c.state_consistent.max_violation);
  r.result(prefix + "lp_residual", c.classical.residual);
  r.result(prefix + "lp_vertices", static_cast<double>(c.classical.vertices));
  r.check_at_most(prefix + "disjoint", c.disjoint.max_violation, tol.disjoint, expect != Expect::Nothing);
  r.check_at_most(prefix + "state_consistent", c.state_consistent.max_violation, tol.prob, false);
  if (expect == Expect::Entangled) {
    r.check_at_least(prefix + "lp_residual_entangled", c.classical.residual, 1e-6);
  } else {
    r.check_at_most(prefix + "classically_generated", c.classical.residual, tol.lp, expect == Expect::Classical);
  }
  if (c.classical.feasible) {
    const std::size_t n = std::min<std::size_t>(10, c.classical.weights.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& w = c.classical.weights[i];
      std::string resp = "a=(";
      for (std::size_t k = 0; k < w.response_a.size(); ++k) resp += (k ? "," : "") + std::to_string(w.response_a[k]);
      resp += ") b=(";
      for (std::size_t k = 0; k < w.response_b.size(); ++k) resp += (k ? "," : "") + std::to_string(w.response_b[k]);
      resp += ")";
      r.result(fmt::format("{}weight[{}]", prefix, i), w.weight);
      r.label(fmt::format("{}vertex[{}]", prefix, i), resp);
    }
  }
  r.label(prefix + "verdict", std::string(to_string(c.verdict)));
}

// ---- commands ----------------------------------------------------------

RunReport cmd_classical_value(const GlobalOptions& g, const std::string& game_file) {
  RunReport r = new_report("classical-value", g);
  const Game game = read_game(game_file, r, g.tolerances());
  const ClassicalSolution sol = classical_value(game);
  r.result("classical_value", sol.value);
  for (std::size_t phi = 0; phi < game.num_states_a(); ++phi) {
    r.label("strategy_a[" + game.states_a()[phi] + "]", game.actions_a()[sol.strategy_a[phi]]);
  }
  for (std::size_t psi = 0; psi < game.num_states_b(); ++psi) {
    r.label("strategy_b[" + game.states_b()[psi] + "]", game.actions_b()[sol.strategy_b[psi]]);
  }
  return r;
}

RunReport cmd_quantum_optimize(const GlobalOptions& g, const std::string& game_file, const StateOptions& s,
                               const OptimizerOptions& o) {
  RunReport r = new_report("quantum-optimize", g);
  const Game game = read_game(game_file, r, g.tolerances());
  const DensityMatrix rho = select_state(s, g, r);
  const OptimizerConfig cfg = o.config(g.seed);
  r.parameters.emplace_back("grid", std::to_string(cfg.grid_resolution));
  r.parameters.emplace_back("iterations", std::to_string(cfg.refinement_iterations));
  r.parameters.emplace_back("restarts", std::to_string(cfg.restarts));
  r.parameters.emplace_back("opt_tolerance", format_tolerance(cfg.tolerance));

  const AngleOptimum angles = optimize_angles(game, rho, cfg);
  r.result("angle_value", angles.value);
  r.result("angle_grid_value", angles.grid_value);
  r.result("angle_best_restart", static_cast<double>(angles.best_restart));
  for (std::size_t phi = 0; phi < game.num_states_a(); ++phi) {
    r.result("theta_a[" + game.states_a()[phi] + "]", angles.strategy.angles_a[phi]);
  }
  for (std::size_t psi = 0; psi < game.num_states_b(); ++psi) {
    r.result("theta_b[" + game.states_b()[psi] + "]", angles.strategy.angles_b[psi]);
  }
  const SeesawOptimum seesaw = seesaw_optimize(game, rho, cfg);
  r.result("seesaw_value", seesaw.value);
  r.result("seesaw_best_restart", static_cast<double>(seesaw.best_restart));
  r.result("seesaw_sweeps", static_cast<double>(seesaw.trace.size()));
  r.result("best_value", std::max(angles.value, seesaw.value));
  return r;
}

RunReport cmd_no_signalling(const GlobalOptions& g, const StateOptions& s, const std::string& alice,
                            const std::string& bob) {
  RunReport r = new_report("no-signalling", g);
  const Tolerances tol = g.tolerances();
  const DensityMatrix rho = select_state(s, g, r);
  const auto angles_a = select_angles(alice, 3, g.seed, 1);
  const auto angles_b = select_angles(bob, 2, g.seed, 2);
  r.parameters.emplace_back("alice", format_angles(angles_a));
  r.parameters.emplace_back("bob", format_angles(angles_b));

  std::vector<Measurement> alice_choices;
  for (double a : angles_a) alice_choices.push_back(projective_pair(a));
  double worst = 0.0;
  for (std::size_t j = 0; j < angles_b.size(); ++j) {
    const auto rep = no_signalling_check(rho, alice_choices, projective_pair(angles_b[j]), tol);
    r.result(fmt::format("deviation[bob={}]", j), rep.max_deviation);
    worst = std::max(worst, rep.max_deviation);
  }
  r.result("max_deviation", worst);
  r.check_at_most("no_signalling", worst, tol.nosig);
  return r;
}

RunReport cmd_classify(const GlobalOptions& g, const std::string& dist_file) {
  RunReport r = new_report("classify", g);
  const Tolerances tol = g.tolerances();
  const JointSignalDistribution p = read_distribution(dist_file, r, tol);
  // Priors are taken from the distribution's own state marginals.
  const ClassificationResult c = classify(p, p.phi_marginal(), p.psi_marginal(), tol);
  add_classification(r, c, tol);
  return r;
}

void add_reduction(RunReport& r, const PsiFreeReductionReport& rep, const Tolerances& tol) {
  r.result("payoff_original", rep.payoff_original);
  r.result("payoff_transformed", rep.payoff_transformed);
  r.result("payoff_difference", rep.payoff_difference);
  r.result("phi_dependence", rep.phi_dependence);
  r.result("correlation_after", rep.correlation_after);
  r.result("construction_deviation", rep.construction_deviation);
  r.check_at_most("payoff_equality", rep.payoff_difference, kReproductionTol);
  r.check_at_most("construction", rep.construction_deviation, tol.lp);
  add_classification(r, rep.transformed, tol, "transformed.", Expect::Classical);
}

RunReport cmd_theorem2(const GlobalOptions& g, const std::string& game_file, const std::string& dist_file) {
  RunReport r = new_report("theorem2", g);
  const Tolerances tol = g.tolerances();
  const Game game = read_game(game_file, r, tol);
  const JointSignalDistribution p = read_distribution(dist_file, r, tol);
  add_reduction(r, verify_psi_free_reduction(game, p, tol), tol);
  return r;
}

std::string table_block(const std::string& title, const ProbabilityTable& t) {
  std::string s = title + "\n";
  s += fmt::format("{:>8}{:>16}{:>16}\n", "", "t=0", "t=1");
  for (std::size_t i = 0; i < t.rows; ++i) {
    s += fmt::format("{:>8}", fmt::format("s={}", i));
    for (std::size_t j = 0; j < t.cols; ++j) s += fmt::format("{:>16}", format_real(t(i, j)));
    s += "\n";
  }
  return s;
}

RunReport cmd_demo(const GlobalOptions& g, const OptimizerOptions& o, const std::string& write_dist) {
  RunReport r = new_report("demo", g);
  const Tolerances tol = g.tolerances();
  const Game game = chsh_game();
  const DensityMatrix rho = singlet_state();
  const auto angles_a = chsh_angles_a();
  const auto angles_b = chsh_angles_b();

  const ClassicalSolution classical = classical_value(game);
  r.result("classical_value", classical.value);
  r.check_at_most("classical_value_reproduction", std::abs(classical.value - 0.75), 1e-15);

  const double quantum = evaluate_qubit_strategy(game, {angles_a, angles_b}, rho);
  r.result("quantum_value", quantum);
  r.result("quantum_value_closed_form", kQuantumValue);
  r.check_at_most("quantum_value_reproduction", std::abs(quantum - kQuantumValue), kReproductionTol);

  const OptimizerConfig cfg = o.config(g.seed);
  const AngleOptimum opt = optimize_angles(game, rho, cfg);
  const SeesawOptimum seesaw = seesaw_optimize(game, rho, cfg);
  r.result("optimized_angle_value", opt.value);
  r.result("optimized_seesaw_value", seesaw.value);
  r.check_at_least("angle_optimizer_attainment", opt.value, kQuantumValue - kOptimizerSlack);
  r.check_at_least("seesaw_attainment", seesaw.value, kQuantumValue - kOptimizerSlack);
  r.check_at_most("optimizer_upper_bound", std::max(opt.value, seesaw.value) - kQuantumValue, kOptimizerSlack);

  double table_error = 0.0;
  for (std::size_t phi = 0; phi < 2; ++phi) {
    for (std::size_t psi = 0; psi < 2; ++psi) {
      const ProbabilityTable t =
          joint_distribution(rho, projective_pair(angles_a[phi]), projective_pair(angles_b[psi]), tol);
      const std::string name = fmt::format("table[phi={},psi={}]", game.states_a()[phi], game.states_b()[psi]);
      r.blocks.push_back(table_block(name, t));
      const double d = angles_b[psi] - angles_a[phi];
      const double sin2 = 0.5 * std::sin(d) * std::sin(d);
      const double cos2 = 0.5 * std::cos(d) * std::cos(d);
      const double expected[4] = {sin2, cos2, cos2, sin2};
      for (std::size_t k = 0; k < 4; ++k) {
        r.result(fmt::format("{}.p{}{}", name, k / 2, k % 2), t.p[k]);
        table_error = std::max(table_error, std::abs(t.p[k] - expected[k]));
      }
    }
  }
  r.check_at_most("table_closed_form", table_error, kReproductionTol);

  std::vector<Measurement> alice;
  for (double a : angles_a) alice.push_back(projective_pair(a));
  double nosig = 0.0;
  for (double b : angles_b) nosig = std::max(nosig, no_signalling_check(rho, alice, projective_pair(b), tol).max_deviation);
  r.result("no_signalling_deviation", nosig);
  r.check_at_most("no_signalling", nosig, tol.nosig);

  const JointSignalDistribution p = chsh_quantum_distribution();
  if (!write_dist.empty()) {
    std::ofstream f(write_dist);
    if (!f) throw Error(ErrorKind::IoError, "cannot write " + write_dist);
    f << io::distribution_to_json(p);
  }
  const ClassificationResult c = classify(p, game.prior_a(), game.prior_b(), tol);
  add_classification(r, c, tol, "quantum.", Expect::Entangled);
  double functional = 0.0;
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t t = 0; t < 2; ++t)
      for (std::size_t phi = 0; phi < 2; ++phi)
        for (std::size_t psi = 0; psi < 2; ++psi) functional += p(s, t, phi, psi) * game.payoff(s, t, phi, psi);
  r.result("quantum.chsh_functional", functional);
  r.check_at_least("quantum.functional_exceeds_classical", functional - classical.value, 1e-6);
  r.verdict("quantum.entangled", c.verdict == Verdict::Entangled);

  const Game variant = chsh_psi_free_game();
  const PsiFreeReductionReport red = verify_psi_free_reduction(variant, p, tol);
  RunReport sub;
  add_reduction(sub, red, tol);
  for (auto& [k, v] : sub.results) r.result("reduction." + k, v);
  for (auto& [k, v] : sub.labels) r.label("reduction." + k, v);
  for (auto c2 : sub.checks) {
    c2.name = "reduction." + c2.name;
    r.checks.push_back(c2);
  }
  return r;
}

void emit(const RunReport& r, const GlobalOptions& g, std::ostream& out) {
  if (g.json) {
    write_json(r, out);
  } else {
    write_text(r, out);
  }
}

}  // namespace

JointSignalDistribution chsh_quantum_distribution() {
  const Game game = chsh_game();
  const auto a = chsh_angles_a();
  const auto b = chsh_angles_b();
  const auto raw = distribution_from_quantum(singlet_state(), angle_family(a), angle_family(b), game.prior_a(),
                                             game.prior_b());
  JointSignalDistribution::Labels labels{game.actions_a(), game.actions_b(), game.states_a(), game.states_b()};
  return JointSignalDistribution::create(std::move(labels), raw.values());
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kExitParse;
    case ErrorKind::ValidationError: return kExitValidation;
    case ErrorKind::PayoffDependsOnPsi: return kExitPayoffDependsOnPsi;
    case ErrorKind::NotDisjoint: return kExitNotDisjoint;
    case ErrorKind::NonBinaryActions: return kExitNonBinaryActions;
    case ErrorKind::NotStateConsistent: return kExitNotStateConsistent;
    case ErrorKind::IoError: return kExitIo;
    default: return kExitOther;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical and quantum values of coordination games with private states"};
  app.name("qcoord");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", QCOORD_VERSION);

  GlobalOptions g;
  app.add_flag("--json", g.json, "Emit a machine-readable JSON report");
  app.add_flag("--timing", g.timing, "Include wall time in the report");
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--threads", g.threads, "OpenMP threads for optimizer restarts and enumeration")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  app.add_option("--tolerance-profile", g.profile, "Numerical tolerance profile")
      ->check(CLI::IsMember({"default", "strict"}))
      ->capture_default_str();

  std::string game_file, dist_file, alice = "0,pi/4", bob = "pi/8", write_dist;
  StateOptions state;
  OptimizerOptions opt;
  auto add_state = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--state", state.selector, "Shared state")
        ->check(CLI::IsMember(choices))
        ->capture_default_str();
    sub->add_option("--state-file", state.file, "State file used with --state file");
  };
  auto add_optimizer = [&](CLI::App* sub) {
    sub->add_option("--grid", opt.grid, "Grid points per angle")->capture_default_str();
    sub->add_option("--iterations", opt.iterations, "Simplex iterations or see-saw sweeps")->capture_default_str();
    sub->add_option("--restarts", opt.restarts, "Restarts per optimizer")->capture_default_str();
    sub->add_option("--opt-tolerance", opt.tolerance, "Convergence tolerance")->capture_default_str();
  };

  auto* classical = app.add_subcommand("classical-value", "Exact classical value of a game file");
  classical->add_option("game", game_file, "Game file")->required();

  auto* quantum = app.add_subcommand("quantum-optimize", "Optimize qubit angles and run see-saw");
  quantum->add_option("game", game_file, "Game file")->required();
  add_state(quantum, {"singlet", "maximally-mixed", "file"});
  add_optimizer(quantum);

  auto* nosig = app.add_subcommand("no-signalling", "Check that Alice's choice leaves Bob's marginal unchanged");
  add_state(nosig, {"singlet", "maximally-mixed", "random", "file"});
  nosig->add_option("--alice", alice, "Alice's angles, comma separated, or 'random'")->capture_default_str();
  nosig->add_option("--bob", bob, "Bob's angles, comma separated, or 'random'")->capture_default_str();

  auto* cls = app.add_subcommand("classify", "Classify a joint signal distribution");
  cls->add_option("distribution", dist_file, "Distribution file")->required();

  auto* thm = app.add_subcommand("theorem2", "Check the psi-free reduction for a psi-independent payoff");
  thm->add_option("game", game_file, "Game file")->required();
  thm->add_option("distribution", dist_file, "Distribution file")->required();

  auto* demo = app.add_subcommand("demo", "Reproduce the coordination-game example end to end");
  add_optimizer(demo);
  demo->add_option("--write-distribution", write_dist, "Also write the quantum distribution to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  omp_set_num_threads(g.threads);
  const auto start = std::chrono::steady_clock::now();
  try {
    RunReport r;
    if (*classical) r = cmd_classical_value(g, game_file);
    else if (*quantum) r = cmd_quantum_optimize(g, game_file, state, opt);
    else if (*nosig) r = cmd_no_signalling(g, state, alice, bob);
    else if (*cls) r = cmd_classify(g, dist_file);
    else if (*thm) r = cmd_theorem2(g, game_file, dist_file);
    else r = cmd_demo(g, opt, write_dist);
    if (g.timing) {
      r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    emit(r, g, out);
    return r.all_passed() ? kExitOk : kExitCheckFailed;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace qcoord::cli
