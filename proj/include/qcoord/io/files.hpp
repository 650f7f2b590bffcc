#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qcoord/game/game.hpp"
#include "qcoord/quantum/density_matrix.hpp"
#include "qcoord/signals/signals.hpp"
#include "qcoord/tolerances.hpp"

// JSON document formats, all carrying "format": 1.
//
// Game:
//   { "format": 1,
//     "states_a": ["0", "pi/4"], "states_b": [...],
//     "prior_a": [0.5, 0.5],     "prior_b": [...],
//     "actions_a": ["0", "1"],   "actions_b": [...],
//     "payoff": [[[[...]]]] }    // indexed [a][b][state_a][state_b]
//
// Joint signal distribution:
//   { "format": 1, "s": [...], "t": [...], "phi": [...], "psi": [...],
//     "p": [...] }               // flat, row-major [s][t][phi][psi]
//
// Shared state, either a density matrix or a state vector (row-major):
//   { "format": 1, "density": { "re": [...], "im": [...] } }
//   { "format": 1, "vector":  { "re": [...], "im": [...] } }
//
// Syntax errors throw ParseError with line and column; schema violations
// throw ValidationError naming the offending field.
namespace qcoord::io {

std::string read_file(const std::filesystem::path& path);

Game parse_game(std::string_view text, const Tolerances& tol = {});
Game load_game(const std::filesystem::path& path, const Tolerances& tol = {});
std::string game_to_json(const Game& g);

JointSignalDistribution parse_distribution(std::string_view text, const Tolerances& tol = {});
JointSignalDistribution load_distribution(const std::filesystem::path& path, const Tolerances& tol = {});
std::string distribution_to_json(const JointSignalDistribution& p);

DensityMatrix parse_state(std::string_view text, const Tolerances& tol = {});
DensityMatrix load_state(const std::filesystem::path& path, const Tolerances& tol = {});

/// Angle in radians: a decimal number, or a multiple of pi written as
/// "pi", "-pi/8", "3pi/8", "3*pi/8", "0.5*pi". Throws ParseError.
double parse_angle(std::string_view token);

/// Comma-separated angles; throws ParseError on an empty list or bad token.
std::vector<double> parse_angle_list(std::string_view text);

}  // namespace qcoord::io
