#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spined {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An operation's stated precondition does not hold.
class PreconditionViolation : public Error {
public:
  using Error::Error;
};

// A vertex index fell outside the declared vertex range.
class RangeError : public Error {
public:
  using Error::Error;
};

// Input text could not be parsed; carries the offending position.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// The input exceeds a desk-scale bound of an exact algorithm.
class BoundExceeded : public Error {
public:
  using Error::Error;
};

// A bounded search ran out of budget without finding a witness.
class BudgetExhausted : public Error {
public:
  using Error::Error;
};

// The two halves of a glued construction disagree on an identified
// vertex; the input diagram was not a valid one.
class ConstructionInconsistent : public Error {
public:
  using Error::Error;
};

}  // namespace spined
