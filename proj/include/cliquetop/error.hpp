#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquetop {

/// Raised when a caller passes a simplex, level or option the operation cannot accept.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input text. `line()` is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// The clique complex would exceed the configured simplex cap.
class ComplexTooLarge : public std::length_error {
public:
    explicit ComplexTooLarge(std::size_t cap)
        : std::length_error("clique complex exceeds the simplex cap of " + std::to_string(cap)),
          cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

} // namespace cliquetop
