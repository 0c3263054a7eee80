#ifndef DETLINK_ERRORS_HPP
#define DETLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace detlink {

// Caller violated a precondition (mismatched rings, bad parameters, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The operation is undefined for the given value (leading term of 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A configured resource cap was hit before the computation finished.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input; coordinates are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(message), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace detlink

#endif
