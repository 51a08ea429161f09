#ifndef MATCHTOP_ERRORS_HPP
#define MATCHTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matchtop {

// Malformed or inconsistent input (bad edge, unknown format, parse failure).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failure with a source position. Lines and columns are 1-based.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, int line, int column)
        : InputError(msg + " (line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

// The request is well-formed but outside the supported size envelope.
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation was called outside its stated precondition.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace matchtop

#endif  // MATCHTOP_ERRORS_HPP
