#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuh {

enum class ErrorCode {
  NonUnitPhase,
  DuplicateIncidence,
  BadVertexIndex,
  BadEdgeIndex,
  NotAdjacentInEdge,
  LengthMismatch,
  BadParameter,
  TooLarge,
  ZeroDegreeVertex,
  NotHermitian,
  NotSquare,
  NoConvergence,
  NonPositiveDiagonal,
  ZeroVector,
  SyntaxError,
  SchemaError,
  IoError,
};

const char* to_string(ErrorCode code);

// Single exception type for malformed inputs. `location` is a document path
// such as "edges[0][1].omega" when the failure can be pinned to one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string location = {},
        std::vector<std::size_t> indices = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }
  // Offending vertex indices for ZeroDegreeVertex.
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorCode code_;
  std::string location_;
  std::vector<std::size_t> indices_;
};

}  // namespace cuh
