#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equicolor {

enum class ErrorCode {
  ParseError,
  InvalidEdge,
  UnknownVertex,
  EmptyGraph,
  PureCycleComponent,
  NotBranchVertex,
  ThreadCycle,
  NotOneThreadPair,
  InvalidColorCount,
  IncompleteColoring,
  VertexCollision,
  ColorCountMismatch,
  PreconditionViolated,
  ExceptionCase,
  ShapeMismatch,
  HypothesisViolation,
  NoConfigFound,
  ExtensionFailed,
  Infeasible,
  TooLarge,
  UnknownFamily,
  GenerationFailed,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace equicolor
