// Regenerates the files under fixtures/. Usage: make_fixtures <dir>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "qcoord/io/files.hpp"

namespace {

using qcoord::Game;
using qcoord::JointSignalDistribution;

void write(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  std::cout << "wrote " << path.generic_string() << "\n";
}

Game constant_game(double c) {
  Game::Spec s;
  s.states_a = {"x", "y"};
  s.states_b = {"u", "v", "w"};
  s.prior_a = {0.25, 0.75};
  s.prior_b = {0.5, 0.25, 0.25};
  s.actions_a = {"0", "1"};
  s.actions_b = {"0", "1", "2"};
  s.payoff.assign(2 * 3 * 2 * 3, c);
  return Game::create(std::move(s));
}

// s = phi xor x, t = psi xor x with x a fair shared coin.
JointSignalDistribution shared_coin() {
  std::vector<double> p(16, 0.0);
  for (int x = 0; x < 2; ++x)
    for (int phi = 0; phi < 2; ++phi)
      for (int psi = 0; psi < 2; ++psi) {
        const int s = phi ^ x, t = psi ^ x;
        p[((s * 2 + t) * 2 + phi) * 2 + psi] += 0.125;
      }
  return JointSignalDistribution::create(JointSignalDistribution::index_labels(2, 2, 2, 2), std::move(p));
}

// s copies psi, t is always 0.
JointSignalDistribution copy_psi() {
  std::vector<double> p(16, 0.0);
  for (int phi = 0; phi < 2; ++phi)
    for (int psi = 0; psi < 2; ++psi) p[((psi * 2 + 0) * 2 + phi) * 2 + psi] = 0.25;
  return JointSignalDistribution::create(JointSignalDistribution::index_labels(2, 2, 2, 2), std::move(p));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  namespace io = qcoord::io;

  write(dir / "chsh.game", io::game_to_json(qcoord::chsh_game()));
  write(dir / "chsh-psi-free.game", io::game_to_json(qcoord::chsh_psi_free_game()));
  write(dir / "constant.game", io::game_to_json(constant_game(0.625)));
  write(dir / "shared-coin.dist", io::distribution_to_json(shared_coin()));
  write(dir / "copy-psi.dist", io::distribution_to_json(copy_psi()));
  write(dir / "chsh-quantum.dist", io::distribution_to_json(qcoord::cli::chsh_quantum_distribution()));

  // Unnormalized; the loader normalizes state vectors.
  write(dir / "singlet.state", "{\n  \"format\": 1,\n  \"vector\": {\"re\": [0, 1, -1, 0], \"im\": [0, 0, 0, 0]}\n}\n");

  // Invalid inputs for diagnostics tests.
  std::string bad = io::game_to_json(qcoord::chsh_game());
  const auto pos = bad.find("\"prior_a\": [\n    0.5,\n    0.5");
  if (pos == std::string::npos) {
    std::cerr << "unexpected game layout\n";
    return 1;
  }
  bad.replace(pos, std::string("\"prior_a\": [\n    0.5,\n    0.5").size(), "\"prior_a\": [\n    0.5,\n    0.4");
  write(dir / "bad-prior.game", bad);
  write(dir / "malformed.game", "{\n  \"format\": 1,\n  \"states_a\": [\"0\", \"pi/4\"\n  \"states_b\": []\n}\n");
  return 0;
}
