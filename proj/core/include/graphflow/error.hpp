#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphflow {

enum class ErrorCode {
  Parse,
  ResourceLimit,
  NotRegular,
  NotContractible,
  GradeMismatch,
  InvalidParams,
  Validation,
  DegenerateProjection,
  InconsistentDiagram,
  CoincidentPoints,
  CurvesIntersect,
  UnsupportedGraph,
  DimensionMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphflow
