#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distdom {

// Base class for every error the library reports to callers.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments: bad vertex ids, malformed orientations, infeasible inputs.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An exact search refused to run (or stopped) because it would exceed its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace distdom
