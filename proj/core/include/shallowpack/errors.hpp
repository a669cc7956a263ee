#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shallowpack {

/// Raised when an exact (enumerative) routine would exceed its work budget.
/// Callers are expected to fall back to a sampled estimate.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace shallowpack
