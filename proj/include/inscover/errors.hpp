#pragma once

#include <stdexcept>
#include <string>

namespace inscover {

// Caller violated a documented precondition (arity mismatch, out-of-range
// symbol, unsupported parameters).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance is too large for the configured resource guard, or an
// enumeration would exceed its limits.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed code/system file. Carries the 1-based line number.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace inscover
