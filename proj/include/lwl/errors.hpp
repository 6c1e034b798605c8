#pragma once

#include <stdexcept>
#include <string>

namespace lwl {

/// Malformed arguments: bad vertex id, unknown pattern, radius mismatch.
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The operation is undefined on this input (e.g. eccentricity of a disconnected graph).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// An explicit resource budget would be exceeded.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Text input does not follow the file grammar. Carries the 1-based line number (0 if unknown).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// An internal identity failed (e.g. a local tally not divisible by the orbit size). Always a bug.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace lwl
