#include "qcoord/io/files.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qcoord/error.hpp"

namespace qcoord::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& field, const std::string& msg) {
  throw Error(ErrorKind::ValidationError, field + ": " + msg);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t at = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
}

void check_format(const json& doc) {
  if (!doc.is_object()) invalid("<root>", "expected a JSON object");
  if (!doc.contains("format")) invalid("format", "missing");
  const json& f = doc["format"];
  if (!f.is_number_integer() || f.get<long long>() != 1) invalid("format", "unsupported, expected 1");
}

const json& field(const json& doc, const std::string& name) {
  if (!doc.contains(name)) invalid(name, "missing");
  return doc[name];
}

std::vector<std::string> label_list(const json& doc, const std::string& name) {
  const json& v = field(doc, name);
  if (!v.is_array() || v.empty()) invalid(name, "expected a non-empty array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) invalid(name + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i] == out[j]) invalid(name, "duplicate label \"" + out[i] + "\"");
    }
  }
  return out;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) invalid(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) invalid(path, "not finite");
  return x;
}

std::vector<double> number_list(const json& doc, const std::string& name) {
  const json& v = field(doc, name);
  if (!v.is_array()) invalid(name, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(number(v[i], name + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void check_probability_vector(const std::vector<double>& p, std::size_t n, const std::string& name,
                              const Tolerances& tol) {
  if (p.size() != n) {
    invalid(name, "has " + std::to_string(p.size()) + " entries, expected " + std::to_string(n));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0) invalid(name + "[" + std::to_string(i) + "]", "negative");
    total += p[i];
  }
  if (std::abs(total - 1.0) > tol.prob) invalid(name, "sums to " + std::to_string(total) + ", not 1");
}

// Flattens a nested array of the given shape, row-major.
void flatten(const json& v, const std::vector<std::size_t>& shape, std::size_t depth,
             const std::string& path, std::vector<double>& out) {
  if (depth == shape.size()) {
    out.push_back(number(v, path));
    return;
  }
  if (!v.is_array() || v.size() != shape[depth]) {
    invalid(path, "expected an array of length " + std::to_string(shape[depth]));
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    flatten(v[i], shape, depth + 1, path + "[" + std::to_string(i) + "]", out);
  }
}

std::vector<Complex> complex_entries(const json& obj, const std::string& name) {
  if (!obj.is_object()) invalid(name, "expected an object with \"re\" and \"im\"");
  const auto re = number_list(obj, "re");
  std::vector<double> im(re.size(), 0.0);
  if (obj.contains("im")) im = number_list(obj, "im");
  if (im.size() != re.size()) invalid(name + ".im", "length differs from " + name + ".re");
  std::vector<Complex> out(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) out[i] = {re[i], im[i]};
  return out;
}

std::size_t exact_sqrt(std::size_t n) {
  const auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  return r * r == n ? r : 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Game parse_game(std::string_view text, const Tolerances& tol) {
  const json doc = parse_json(text);
  check_format(doc);
  Game::Spec s;
  s.states_a = label_list(doc, "states_a");
  s.states_b = label_list(doc, "states_b");
  s.actions_a = label_list(doc, "actions_a");
  s.actions_b = label_list(doc, "actions_b");
  s.prior_a = number_list(doc, "prior_a");
  s.prior_b = number_list(doc, "prior_b");
  check_probability_vector(s.prior_a, s.states_a.size(), "prior_a", tol);
  check_probability_vector(s.prior_b, s.states_b.size(), "prior_b", tol);
  flatten(field(doc, "payoff"),
          {s.actions_a.size(), s.actions_b.size(), s.states_a.size(), s.states_b.size()}, 0, "payoff",
          s.payoff);
  try {
    return Game::create(std::move(s), tol);
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, e.what());
  }
}

Game load_game(const std::filesystem::path& path, const Tolerances& tol) {
  return parse_game(read_file(path), tol);
}

std::string game_to_json(const Game& g) {
  ordered_json doc;
  doc["format"] = 1;
  doc["states_a"] = g.states_a();
  doc["states_b"] = g.states_b();
  doc["prior_a"] = g.prior_a();
  doc["prior_b"] = g.prior_b();
  doc["actions_a"] = g.actions_a();
  doc["actions_b"] = g.actions_b();
  ordered_json payoff = ordered_json::array();
  for (std::size_t a = 0; a < g.num_actions_a(); ++a) {
    ordered_json pa = ordered_json::array();
    for (std::size_t b = 0; b < g.num_actions_b(); ++b) {
      ordered_json pb = ordered_json::array();
      for (std::size_t phi = 0; phi < g.num_states_a(); ++phi) {
        ordered_json row = ordered_json::array();
        for (std::size_t psi = 0; psi < g.num_states_b(); ++psi) row.push_back(g.payoff(a, b, phi, psi));
        pb.push_back(std::move(row));
      }
      pa.push_back(std::move(pb));
    }
    payoff.push_back(std::move(pa));
  }
  doc["payoff"] = std::move(payoff);
  return doc.dump(2) + "\n";
}

JointSignalDistribution parse_distribution(std::string_view text, const Tolerances& tol) {
  const json doc = parse_json(text);
  check_format(doc);
  JointSignalDistribution::Labels labels;
  labels.s = label_list(doc, "s");
  labels.t = label_list(doc, "t");
  labels.phi = label_list(doc, "phi");
  labels.psi = label_list(doc, "psi");
  auto p = number_list(doc, "p");
  const std::size_t expected = labels.s.size() * labels.t.size() * labels.phi.size() * labels.psi.size();
  if (p.size() != expected) {
    invalid("p", "has " + std::to_string(p.size()) + " entries, expected " + std::to_string(expected));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0) invalid("p[" + std::to_string(i) + "]", "negative");
  }
  try {
    return JointSignalDistribution::create(std::move(labels), std::move(p), tol);
  } catch (const Error& e) {
    throw Error(ErrorKind::ValidationError, std::string("p: ") + e.what());
  }
}

JointSignalDistribution load_distribution(const std::filesystem::path& path, const Tolerances& tol) {
  return parse_distribution(read_file(path), tol);
}

std::string distribution_to_json(const JointSignalDistribution& p) {
  ordered_json doc;
  doc["format"] = 1;
  doc["s"] = p.labels().s;
  doc["t"] = p.labels().t;
  doc["phi"] = p.labels().phi;
  doc["psi"] = p.labels().psi;
  doc["p"] = p.values();
  return doc.dump(2) + "\n";
}

DensityMatrix parse_state(std::string_view text, const Tolerances& tol) {
  const json doc = parse_json(text);
  check_format(doc);
  const bool has_density = doc.contains("density");
  const bool has_vector = doc.contains("vector");
  if (has_density == has_vector) invalid("density", "exactly one of \"density\" or \"vector\" is required");
  try {
    if (has_vector) {
      const auto v = complex_entries(doc["vector"], "vector");
      if (v.empty()) invalid("vector", "empty");
      if (v.size() > kMaxDim) invalid("vector", "dimension exceeds " + std::to_string(kMaxDim));
      return pure_state(v, tol);
    }
    auto m = complex_entries(doc["density"], "density");
    const std::size_t n = exact_sqrt(m.size());
    if (n == 0) invalid("density", "entry count " + std::to_string(m.size()) + " is not a square");
    if (n > kMaxDim) invalid("density", "dimension exceeds " + std::to_string(kMaxDim));
    return DensityMatrix::from_matrix(ComplexMatrix(n, n, std::move(m)), tol);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ValidationError) throw;
    throw Error(ErrorKind::ValidationError, std::string(has_vector ? "vector: " : "density: ") + e.what());
  }
}

DensityMatrix load_state(const std::filesystem::path& path, const Tolerances& tol) {
  return parse_state(read_file(path), tol);
}

double parse_angle(std::string_view token) {
  const std::string_view t = trim(token);
  const auto bad = [&]() -> double {
    throw Error(ErrorKind::ParseError, "malformed angle \"" + std::string(token) + "\"");
  };
  if (t.empty()) return bad();
  double value = 0.0;
  if (parse_double(t, value)) return value;

  const auto pi_pos = t.find("pi");
  if (pi_pos == std::string_view::npos) return bad();

  std::string_view coef = t.substr(0, pi_pos);
  std::string_view rest = t.substr(pi_pos + 2);
  if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
  double c = 1.0;
  if (coef.empty() || coef == "+") {
    c = 1.0;
  } else if (coef == "-") {
    c = -1.0;
  } else if (!parse_double(coef, c)) {
    return bad();
  }
  double d = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') return bad();
    rest.remove_prefix(1);
    if (!parse_double(rest, d) || d == 0.0) return bad();
  }
  return c * std::numbers::pi / d;
}

std::vector<double> parse_angle_list(std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) throw Error(ErrorKind::ParseError, "empty angle list");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_angle(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace qcoord::io
