#include "equicolor/error.hpp"
#include "equicolor/rational.hpp"

namespace equicolor {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::PureCycleComponent: return "PureCycleComponent";
    case ErrorCode::NotBranchVertex: return "NotBranchVertex";
    case ErrorCode::ThreadCycle: return "ThreadCycle";
    case ErrorCode::NotOneThreadPair: return "NotOneThreadPair";
    case ErrorCode::InvalidColorCount: return "InvalidColorCount";
    case ErrorCode::IncompleteColoring: return "IncompleteColoring";
    case ErrorCode::VertexCollision: return "VertexCollision";
    case ErrorCode::ColorCountMismatch: return "ColorCountMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ExceptionCase: return "ExceptionCase";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::HypothesisViolation: return "HypothesisViolation";
    case ErrorCode::NoConfigFound: return "NoConfigFound";
    case ErrorCode::ExtensionFailed: return "ExtensionFailed";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  }
}

}  // namespace equicolor
