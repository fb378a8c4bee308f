#include "hyperspec/error.hpp"

namespace hyperspec {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptyVertexSet: return "EmptyVertexSet";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NoEdges: return "NoEdges";
    case ErrorCode::TrivialCut: return "TrivialCut";
    case ErrorCode::DeletesAllVertices: return "DeletesAllVertices";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::IsolatedVertexUnderNormalized:
      return "IsolatedVertexUnderNormalized";
    case ErrorCode::MissingCustomValue: return "MissingCustomValue";
    case ErrorCode::NonPositiveCustom: return "NonPositiveCustom";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::NotSelfAdjointKind: return "NotSelfAdjointKind";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::SchemeMismatch: return "SchemeMismatch";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::MissingAnnotations: return "MissingAnnotations";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::BipartiteLikeNonconvergence:
      return "BipartiteLikeNonconvergence";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoWeakCut: return "NoWeakCut";
  }
  return "Unknown";
}

}  // namespace hyperspec
