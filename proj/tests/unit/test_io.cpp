#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <string>

#include "qcoord/error.hpp"
#include "qcoord/io/files.hpp"

using namespace qcoord;
using std::numbers::pi;

namespace {

const std::filesystem::path kFixtures = QCOORD_FIXTURES_DIR;

// Returns the message of the expected error, failing if another kind or
// no error is raised.
std::string error_message(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
    return e.what();
  }
  FAIL("expected ", to_string(kind));
  return {};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

const char* kSmallGame = R"({
  "format": 1,
  "states_a": ["x"], "states_b": ["y", "z"],
  "prior_a": [1], "prior_b": [0.25, 0.75],
  "actions_a": ["0", "1"], "actions_b": ["0"],
  "payoff": [[[[1, 2]]], [[[3, 4]]]]
})";

}  // namespace

TEST_SUITE("games") {
  TEST_CASE("fixture round trip") {
    const Game g = io::load_game(kFixtures / "chsh.game");
    const Game ref = chsh_game();
    CHECK(g.states_a() == ref.states_a());
    CHECK(g.states_b() == ref.states_b());
    CHECK(g.payoff_tensor() == ref.payoff_tensor());
    CHECK(io::game_to_json(g) == io::read_file(kFixtures / "chsh.game"));
  }

  TEST_CASE("payoff nesting is [a][b][state_a][state_b]") {
    const Game g = io::parse_game(kSmallGame);
    CHECK(g.payoff(0, 0, 0, 1) == 2.0);
    CHECK(g.payoff(1, 0, 0, 0) == 3.0);
    CHECK(io::parse_game(io::game_to_json(g)).payoff_tensor() == g.payoff_tensor());
  }

  TEST_CASE("prior that does not sum to one names the field") {
    const auto msg = error_message(ErrorKind::ValidationError, [] { io::load_game(kFixtures / "bad-prior.game"); });
    CHECK(contains(msg, "prior_a"));
    CHECK(contains(msg, "0.9"));
  }

  TEST_CASE("syntax errors carry line and column") {
    const auto msg = error_message(ErrorKind::ParseError, [] { io::load_game(kFixtures / "malformed.game"); });
    CHECK(contains(msg, "line 4"));
    CHECK(contains(msg, "column"));
  }

  TEST_CASE("schema violations") {
    std::string text = kSmallGame;
    const auto with = [&](const std::string& from, const std::string& to) {
      std::string t = text;
      t.replace(t.find(from), from.size(), to);
      return t;
    };
    CHECK(contains(error_message(ErrorKind::ValidationError, [&] { io::parse_game(with("\"format\": 1", "\"format\": 2")); }),
                   "format"));
    CHECK(contains(error_message(ErrorKind::ValidationError, [&] { io::parse_game(with("\"format\": 1,", "")); }),
                   "format: missing"));
    CHECK(contains(error_message(ErrorKind::ValidationError, [&] { io::parse_game(with("[[[3, 4]]]", "[[[3]]]")); }),
                   "payoff[1][0][0]"));
    CHECK(contains(error_message(ErrorKind::ValidationError, [&] { io::parse_game(with("[[[3, 4]]]", "[[[3, \"4\"]]]")); }),
                   "payoff[1][0][0][1]"));
    CHECK(contains(error_message(ErrorKind::ValidationError, [&] { io::parse_game(with("[\"y\", \"z\"]", "[\"y\", \"y\"]")); }),
                   "duplicate"));
    CHECK(contains(error_message(ErrorKind::ValidationError, [&] { io::parse_game(with("[0.25, 0.75]", "[-0.25, 1.25]")); }),
                   "prior_b[0]"));
    CHECK(contains(error_message(ErrorKind::ValidationError, [&] { io::parse_game(with("[\"x\"]", "[]")); }),
                   "states_a"));
    CHECK(contains(error_message(ErrorKind::ValidationError, [&] { io::parse_game("[1, 2]"); }), "object"));
  }

  TEST_CASE("missing file") {
    error_message(ErrorKind::IoError, [] { io::load_game(kFixtures / "no-such.game"); });
  }
}

TEST_SUITE("distributions") {
  TEST_CASE("fixtures load and round trip") {
    for (const char* name : {"shared-coin.dist", "copy-psi.dist", "chsh-quantum.dist"}) {
      const auto p = io::load_distribution(kFixtures / name);
      CHECK(p.values().size() == 16);
      CHECK(io::distribution_to_json(p) == io::read_file(kFixtures / name));
    }
  }

  TEST_CASE("invalid distributions") {
    CHECK(contains(error_message(ErrorKind::ValidationError,
                                 [] {
                                   io::parse_distribution(
                                       R"({"format": 1, "s": ["a"], "t": ["b"], "phi": ["c"], "psi": ["d", "e"], "p": [0.5, 0.6]})");
                                 }),
                   "p:"));
    CHECK(contains(error_message(ErrorKind::ValidationError,
                                 [] {
                                   io::parse_distribution(
                                       R"({"format": 1, "s": ["a"], "t": ["b"], "phi": ["c"], "psi": ["d"], "p": [0.5, 0.5]})");
                                 }),
                   "p"));
    CHECK(contains(error_message(ErrorKind::ValidationError,
                                 [] { io::parse_distribution(R"({"format": 1, "s": ["a"], "t": ["b"], "phi": ["c"]})"); }),
                   "psi"));
  }
}

TEST_SUITE("states") {
  TEST_CASE("state vector is normalized") {
    const auto rho = io::load_state(kFixtures / "singlet.state");
    CHECK(rho.dim() == 4);
    CHECK(rho.matrix()(1, 1).real() == doctest::Approx(0.5));
    CHECK(rho.matrix()(1, 2).real() == doctest::Approx(-0.5));
  }

  TEST_CASE("density matrix with optional imaginary part") {
    const auto rho = io::parse_state(R"({"format": 1, "density": {"re": [0.5, 0, 0, 0.5]}})");
    CHECK(rho.dim() == 2);
    const auto y = io::parse_state(R"({"format": 1, "density": {"re": [0.5, 0, 0, 0.5], "im": [0, -0.5, 0.5, 0]}})");
    CHECK(y.matrix()(0, 1).imag() == doctest::Approx(-0.5));
  }

  TEST_CASE("invalid states") {
    error_message(ErrorKind::ValidationError, [] { io::parse_state(R"({"format": 1})"); });
    error_message(ErrorKind::ValidationError,
                  [] { io::parse_state(R"({"format": 1, "density": {"re": [1, 0, 0]}})"); });
    error_message(ErrorKind::ValidationError,
                  [] { io::parse_state(R"({"format": 1, "density": {"re": [2, 0, 0, -1]}})"); });
    error_message(ErrorKind::ValidationError, [] { io::parse_state(R"({"format": 1, "vector": {"re": [0, 0]}})"); });
    error_message(ErrorKind::ValidationError,
                  [] { io::parse_state(R"({"format": 1, "vector": {"re": [1, 0], "im": [0]}})"); });
  }
}

TEST_SUITE("angles") {
  TEST_CASE("accepted tokens") {
    CHECK(io::parse_angle("0") == 0.0);
    CHECK(io::parse_angle("0.25") == 0.25);
    CHECK(io::parse_angle("-1.5") == -1.5);
    CHECK(io::parse_angle("pi") == pi);
    CHECK(io::parse_angle("-pi/8") == -pi / 8);
    CHECK(io::parse_angle("3pi/8") == 3 * pi / 8);
    CHECK(io::parse_angle("3*pi/8") == 3 * pi / 8);
    CHECK(io::parse_angle("0.5*pi") == 0.5 * pi);
    CHECK(io::parse_angle(" pi/4 ") == pi / 4);
  }

  TEST_CASE("rejected tokens") {
    for (const char* bad : {"", "pi/x", "pi/0", "2pie", "tau", "1e999", "pi*2", "--pi", "nan"})
      error_message(ErrorKind::ParseError, [&] { io::parse_angle(bad); });
  }

  TEST_CASE("lists") {
    CHECK(io::parse_angle_list("0,pi/4") == std::vector<double>{0.0, pi / 4});
    CHECK(io::parse_angle_list("-pi/8, pi/8").size() == 2);
    error_message(ErrorKind::ParseError, [] { io::parse_angle_list(""); });
    error_message(ErrorKind::ParseError, [] { io::parse_angle_list("0,,1"); });
  }
}
