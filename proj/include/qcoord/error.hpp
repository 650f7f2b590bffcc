#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcoord {

enum class ErrorKind {
  BlochNormExceeded,
  ZeroVector,
  DimensionMismatch,
  DimensionTooLarge,
  NonFinite,
  InvalidState,
  InvalidMeasurement,
  NegativeProbability,
  ShapeMismatch,
  InvalidGame,
  InvalidBehavior,
  EnumerationCapExceeded,
  InvalidConfig,
  IncompatibleLabels,
  NonBinaryActions,
  InvalidDistribution,
  NotStateConsistent,
  AlphabetTooLarge,
  PayoffDependsOnPsi,
  NotDisjoint,
  ParseError,
  ValidationError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qcoord
