#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"

using nlohmann::json;
using namespace qcoord::cli;

namespace {

const std::string kFixtures = QCOORD_FIXTURES_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qcoord");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

// "key = value" lines of the text report.
std::map<std::string, std::string> text_fields(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find(" = ");
    if (eq != std::string::npos) out[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return out;
}

std::size_t significant_digits(const std::string& s) {
  std::size_t n = 0;
  bool leading = true;
  for (char c : s) {
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++n;
  }
  return n;
}

const std::vector<std::vector<std::string>> kCommands{
    {"classical-value", fixture("chsh.game")},
    {"classical-value", fixture("constant.game")},
    {"quantum-optimize", fixture("chsh.game"), "--state", "singlet", "--restarts", "3", "--grid", "8"},
    {"quantum-optimize", fixture("chsh.game"), "--state", "file", "--state-file", fixture("singlet.state"),
     "--restarts", "2", "--grid", "6"},
    {"no-signalling"},
    {"no-signalling", "--state", "random", "--alice", "random", "--bob", "random"},
    {"classify", fixture("chsh-quantum.dist")},
    {"classify", fixture("shared-coin.dist")},
    {"classify", fixture("copy-psi.dist")},
    {"theorem2", fixture("chsh-psi-free.game"), fixture("chsh-quantum.dist")},
    {"demo", "--restarts", "2"},
};

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run_cli({"classical-value", fixture("chsh.game")}).code == kExitOk);
  CHECK(run_cli({"classify", fixture("copy-psi.dist")}).code == kExitOk);
  CHECK(run_cli({"classical-value", fixture("malformed.game")}).code == kExitParse);
  CHECK(run_cli({"classical-value", fixture("bad-prior.game")}).code == kExitValidation);
  CHECK(run_cli({"theorem2", fixture("chsh.game"), fixture("chsh-quantum.dist")}).code == kExitPayoffDependsOnPsi);
  CHECK(run_cli({"theorem2", fixture("chsh-psi-free.game"), fixture("copy-psi.dist")}).code == kExitNotDisjoint);
  CHECK(run_cli({"quantum-optimize", fixture("constant.game")}).code == kExitNonBinaryActions);
  CHECK(run_cli({"classical-value", fixture("missing.game")}).code == kExitIo);
  CHECK(run_cli({"no-signalling", "--alice", "pi/x"}).code == kExitParse);
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"--threads", "0", "demo"}).code == kExitUsage);
  CHECK(run_cli({"--tolerance-profile", "loose", "demo"}).code == kExitUsage);
  CHECK(run_cli({"--version"}).code == kExitOk);
}

TEST_CASE("diagnostics go to the error stream") {
  const auto r = run_cli({"classical-value", fixture("bad-prior.game")});
  CHECK(r.out.empty());
  CHECK(r.err.find("prior_a") != std::string::npos);
  const auto m = run_cli({"classical-value", fixture("malformed.game")});
  CHECK(m.err.find("line 4") != std::string::npos);
}

TEST_CASE("classical value") {
  const auto r = run_cli({"--json", "classical-value", fixture("chsh.game")});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["results"]["classical_value"].get<double>() == 0.75);
  CHECK(j["inputs"][0]["sha256"].get<std::string>().size() == 64);
  const auto c = run_cli({"--json", "classical-value", fixture("constant.game")});
  CHECK(json::parse(c.out)["results"]["classical_value"].get<double>() == 0.625);
}

TEST_CASE("quantum optimize") {
  const auto s = json::parse(run_cli({"--json", "--seed", "7", "quantum-optimize", fixture("chsh.game")}).out);
  CHECK(s["results"]["angle_value"].get<double>() >= 0.853552);
  CHECK(s["results"]["seesaw_value"].get<double>() >= 0.853552);
  const auto m = run_cli({"--json", "quantum-optimize", fixture("chsh.game"), "--state", "maximally-mixed"});
  REQUIRE(m.code == 0);
  const auto mj = json::parse(m.out);
  CHECK(mj["results"]["angle_value"].get<double>() <= 0.750001);
  CHECK(mj["results"]["seesaw_value"].get<double>() <= 0.750001);
}

TEST_CASE("classify verdicts") {
  const auto verdict = [](const std::string& name) {
    return json::parse(run_cli({"--json", "classify", fixture(name)}).out)["labels"]["verdict"].get<std::string>();
  };
  CHECK(verdict("chsh-quantum.dist") == "Entangled");
  CHECK(verdict("shared-coin.dist") == "ClassicallyGenerated");
  CHECK(verdict("copy-psi.dist") == "Signalling");
}

TEST_CASE("demo reproduces the reference values") {
  const auto r = run_cli({"demo"});
  REQUIRE(r.code == 0);
  const auto f = text_fields(r.out);
  CHECK(f.at("classical_value") == "0.7500000000");
  CHECK(f.at("quantum_value") == "0.8535533906");
  CHECK(f.at("quantum.verdict") == "Entangled");
  CHECK(f.at("reduction.transformed.verdict") == "ClassicallyGenerated");
  CHECK(r.out.find("status: ok") != std::string::npos);
}

TEST_CASE("json and text agree to the printed digits") {
  for (const auto& cmd : kCommands) {
    const auto text = run_cli(cmd);
    auto with_json = cmd;
    with_json.insert(with_json.begin(), "--json");
    const auto machine = run_cli(with_json);
    CAPTURE(cmd[0]);
    REQUIRE(text.code == machine.code);
    const json j = json::parse(machine.out);
    const auto fields = text_fields(text.out);
    for (const auto& [key, value] : j["results"].items()) {
      REQUIRE(fields.count(key) == 1);
      const std::string& printed = fields.at(key);
      const double v = value.get<double>();
      CHECK(std::abs(std::strtod(printed.c_str(), nullptr) - v) <= 5e-10 * std::max(1.0, std::abs(v)));
      if (v != 0.0) CHECK(significant_digits(printed) == 10);
    }
    for (const auto& [key, value] : j["labels"].items()) CHECK(fields.at(key) == value.get<std::string>());
    for (const auto& [key, value] : j["verdicts"].items()) CHECK(fields.at(key) == (value.get<bool>() ? "yes" : "no"));
    for (const auto& c : j["checks"]) {
      const bool gating = c["gating"].get<bool>();
      const bool passed = c["passed"].get<bool>();
      std::string line = "check " + c["name"].get<std::string>() + ":";
      CHECK(text.out.find(line) != std::string::npos);
      if (gating && !passed) CHECK(text.code == kExitCheckFailed);
    }
    CHECK(j["passed"].get<bool>() == (machine.code == 0));
  }
}

TEST_CASE("identical seed gives byte-identical json") {
  for (const auto& cmd : kCommands) {
    auto args = cmd;
    args.insert(args.begin(), {"--json", "--seed", "7"});
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CAPTURE(cmd[0]);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("thread count does not change the output") {
  const auto one = run_cli({"--json", "--threads", "1", "--seed", "3", "quantum-optimize", fixture("chsh.game"),
                            "--restarts", "4", "--grid", "8"});
  const auto four = run_cli({"--json", "--threads", "4", "--seed", "3", "quantum-optimize", fixture("chsh.game"),
                             "--restarts", "4", "--grid", "8"});
  auto strip = [](std::string s) {
    json j = json::parse(s);
    j["parameters"].erase("threads");
    return j.dump();
  };
  CHECK(strip(one.out) == strip(four.out));
  run_cli({"--threads", "1", "--version"});
}

TEST_CASE("timing is opt-in") {
  CHECK_FALSE(json::parse(run_cli({"--json", "demo", "--restarts", "1"}).out).contains("wall_time_ms"));
  CHECK(json::parse(run_cli({"--json", "--timing", "demo", "--restarts", "1"}).out).contains("wall_time_ms"));
}
