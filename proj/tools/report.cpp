#include "report.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

namespace qcoord::cli {

void RunReport::add_input(const std::filesystem::path& path, const std::string& content) {
  inputs.push_back({path.generic_string(), sha256_hex(content)});
}

bool RunReport::check_at_most(std::string name, double value, double tolerance, bool gating) {
  const bool ok = std::isfinite(value) && value <= tolerance;
  checks.push_back({std::move(name), value, "<=", tolerance, ok, gating});
  return ok;
}

bool RunReport::check_at_least(std::string name, double value, double bound, bool gating) {
  const bool ok = std::isfinite(value) && value >= bound;
  checks.push_back({std::move(name), value, ">=", bound, ok, gating});
  return ok;
}

bool RunReport::all_passed() const {
  for (const auto& c : checks) {
    if (c.gating && !c.passed) return false;
  }
  return true;
}

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  return fmt::format("{:#.10g}", v);
}

std::string format_tolerance(double v) { return fmt::format("{:.6g}", v); }

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

void write_text(const RunReport& r, std::ostream& out) {
  out << fmt::format("qcoord {} {}\n", r.tool_version, r.command);
  for (const auto& in : r.inputs) out << fmt::format("input {} sha256={}\n", in.path, in.sha256);
  for (const auto& [k, v] : r.parameters) out << fmt::format("{} = {}\n", k, v);
  for (const auto& b : r.blocks) out << b;
  for (const auto& [k, v] : r.results) out << fmt::format("{} = {}\n", k, format_real(v));
  for (const auto& [k, v] : r.labels) out << fmt::format("{} = {}\n", k, v);
  for (const auto& [k, v] : r.verdicts) out << fmt::format("{} = {}\n", k, v ? "yes" : "no");
  for (const auto& c : r.checks) {
    out << fmt::format("check {}: {} {} {} {}{}\n", c.name, format_real(c.value), c.relation,
                       format_tolerance(c.tolerance), c.passed ? "PASS" : "FAIL",
                       c.gating ? "" : " (informational)");
  }
  if (r.wall_time_ms) out << fmt::format("wall_time_ms = {:.3f}\n", *r.wall_time_ms);
  out << (r.all_passed() ? "status: ok\n" : "status: FAILED\n");
}

void write_json(const RunReport& r, std::ostream& out) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["command"] = r.command;
  doc["tool_version"] = r.tool_version;
  doc["inputs"] = ordered_json::array();
  for (const auto& in : r.inputs) doc["inputs"].push_back({{"path", in.path}, {"sha256", in.sha256}});
  doc["parameters"] = ordered_json::object();
  for (const auto& [k, v] : r.parameters) doc["parameters"][k] = v;
  doc["results"] = ordered_json::object();
  for (const auto& [k, v] : r.results) doc["results"][k] = v;
  doc["labels"] = ordered_json::object();
  for (const auto& [k, v] : r.labels) doc["labels"][k] = v;
  doc["verdicts"] = ordered_json::object();
  for (const auto& [k, v] : r.verdicts) doc["verdicts"][k] = v;
  doc["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    doc["checks"].push_back({{"name", c.name},
                             {"value", c.value},
                             {"relation", c.relation},
                             {"tolerance", c.tolerance},
                             {"passed", c.passed},
                             {"gating", c.gating}});
  }
  if (r.wall_time_ms) doc["wall_time_ms"] = *r.wall_time_ms;
  doc["passed"] = r.all_passed();
  out << doc.dump(2) << "\n";
}

}  // namespace qcoord::cli
