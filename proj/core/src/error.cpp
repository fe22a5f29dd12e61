#include "graphflow/error.hpp"

namespace graphflow {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::GradeMismatch: return "GradeMismatch";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::Validation: return "ValidationError";
    case ErrorCode::DegenerateProjection: return "DegenerateProjection";
    case ErrorCode::InconsistentDiagram: return "InconsistentDiagram";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CurvesIntersect: return "CurvesIntersect";
    case ErrorCode::UnsupportedGraph: return "UnsupportedGraph";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

}  // namespace graphflow
