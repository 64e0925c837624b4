#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sup {

enum class ErrorKind {
    Parse,
    Mode,
    Definition,
    Type,
    DivisionByZero,
    NotASum,
    StepLimitExceeded,
    GraphBudgetExceeded,
    EnumerationUndefined,
    Shape,
    GenerationFailed,
};

const char* errorKindName(ErrorKind kind);

/// Base for every recoverable failure raised by the toolkit.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct SourceLocation {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Parse and mode errors carry the 1-based position of the offending token.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, SourceLocation where, const std::string& message);

    SourceLocation where() const noexcept { return where_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    SourceLocation where_;
    std::string detail_;
};

}  // namespace sup
