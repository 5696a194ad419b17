#include "cuhyper/error.hpp"

namespace cuh {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUnitPhase: return "NonUnitPhase";
    case ErrorCode::DuplicateIncidence: return "DuplicateIncidence";
    case ErrorCode::BadVertexIndex: return "BadVertexIndex";
    case ErrorCode::BadEdgeIndex: return "BadEdgeIndex";
    case ErrorCode::NotAdjacentInEdge: return "NotAdjacentInEdge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroDegreeVertex: return "ZeroDegreeVertex";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NonPositiveDiagonal: return "NonPositiveDiagonal";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& message,
                    const std::string& location) {
  std::string out = to_string(code);
  if (!location.empty()) out += " at " + location;
  out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::string location,
             std::vector<std::size_t> indices)
    : std::runtime_error(compose(code, message, location)),
      code_(code),
      location_(std::move(location)),
      indices_(std::move(indices)) {}

}  // namespace cuh
