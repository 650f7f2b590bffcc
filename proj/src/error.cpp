#include "qcoord/error.hpp"

namespace qcoord {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BlochNormExceeded: return "BlochNormExceeded";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidMeasurement: return "InvalidMeasurement";
    case ErrorKind::NegativeProbability: return "NegativeProbability";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidGame: return "InvalidGame";
    case ErrorKind::InvalidBehavior: return "InvalidBehavior";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::IncompatibleLabels: return "IncompatibleLabels";
    case ErrorKind::NonBinaryActions: return "NonBinaryActions";
    case ErrorKind::InvalidDistribution: return "InvalidDistribution";
    case ErrorKind::NotStateConsistent: return "NotStateConsistent";
    case ErrorKind::AlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorKind::PayoffDependsOnPsi: return "PayoffDependsOnPsi";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace qcoord
