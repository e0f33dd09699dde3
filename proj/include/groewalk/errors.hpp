#pragma once

#include <stdexcept>
#include <string>

namespace groewalk {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two values built over different variable contexts were combined.
struct ContextMismatchError : Error {
    explicit ContextMismatchError(const std::string& msg) : Error(msg) {}
};

// An argument is outside the operation's domain (zero polynomial where a
// nonzero one is required, negative weight entry, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A stated precondition of the operation does not hold.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Problem size exceeds the configured dimension guard.
struct DimensionGuardError : Error {
    explicit DimensionGuardError(const std::string& msg) : Error(msg) {}
};

// Input text could not be parsed; carries a 1-based source position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

}  // namespace groewalk
