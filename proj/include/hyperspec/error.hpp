#ifndef HYPERSPEC_ERROR_HPP
#define HYPERSPEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hyperspec {

enum class ErrorCode {
  // validation
  EmptyVertexSet,
  DuplicateVertex,
  LoopEdge,
  UnknownVertex,
  NonPositiveWeight,
  NoEdges,
  TrivialCut,
  DeletesAllVertices,
  Disconnected,
  IsolatedVertexUnderNormalized,
  MissingCustomValue,
  NonPositiveCustom,
  DimensionMismatch,
  UnknownKind,
  IsolatedVertex,
  NotSelfAdjointKind,
  ZeroVector,
  SchemeMismatch,
  InvalidParams,
  MissingAnnotations,
  ParseError,
  // numerical
  NumericalFailure,
  StepTooLarge,
  BipartiteLikeNonconvergence,
  // hypothesis / oracle gates
  HypothesisViolated,
  TooLarge,
  NoWeakCut,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hyperspec

#endif
