#include "sup/error.hpp"

namespace sup {

const char* errorKindName(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Mode: return "ModeError";
    case ErrorKind::Definition: return "DefinitionError";
    case ErrorKind::Type: return "TypeError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotASum: return "NotASum";
    case ErrorKind::StepLimitExceeded: return "StepLimitExceeded";
    case ErrorKind::GraphBudgetExceeded: return "GraphBudgetExceeded";
    case ErrorKind::EnumerationUndefined: return "EnumerationUndefined";
    case ErrorKind::Shape: return "ShapeError";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    }
    return "Error";
}

ParseError::ParseError(ErrorKind kind, SourceLocation where, const std::string& message)
    : Error(kind, std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message),
      where_(where),
      detail_(message) {}

}  // namespace sup
