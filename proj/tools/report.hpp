#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcoord::cli {

struct Check {
  std::string name;
  double value = 0.0;
  std::string relation;  // "<=" or ">="
  double tolerance = 0.0;
  bool passed = false;
  bool gating = true;  // a failed gating check makes the command exit 1
};

struct InputFile {
  std::string path;
  std::string sha256;
};

struct RunReport {
  std::string command;
  std::string tool_version;
  std::vector<InputFile> inputs;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, double>> results;
  std::vector<std::pair<std::string, std::string>> labels;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::vector<Check> checks;
  // Text-only blocks (tables); every number in them is also in `results`.
  std::vector<std::string> blocks;
  std::optional<double> wall_time_ms;

  void add_input(const std::filesystem::path& path, const std::string& content);
  void result(std::string name, double value) { results.emplace_back(std::move(name), value); }
  void label(std::string name, std::string value) { labels.emplace_back(std::move(name), std::move(value)); }
  void verdict(std::string name, bool value) { verdicts.emplace_back(std::move(name), value); }
  /// Records value <= tolerance.
  bool check_at_most(std::string name, double value, double tolerance, bool gating = true);
  /// Records value >= bound.
  bool check_at_least(std::string name, double value, double bound, bool gating = true);

  bool all_passed() const;
};

/// Reals with 10 significant digits, trailing zeros kept.
std::string format_real(double v);
/// Tolerances and bounds in short form.
std::string format_tolerance(double v);

std::string sha256_hex(const std::string& data);

void write_text(const RunReport& r, std::ostream& out);
void write_json(const RunReport& r, std::ostream& out);

}  // namespace qcoord::cli
