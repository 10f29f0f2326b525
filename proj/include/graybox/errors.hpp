#pragma once

#include <stdexcept>
#include <string>

namespace graybox {

// Violation of a documented precondition (wrong solution length, index out of
// range, malformed construction arguments).
class ContractViolation : public std::logic_error {
  public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Signed 64-bit fitness accumulation overflowed.
class OverflowError : public std::runtime_error {
  public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Input file rejected; `line` is the 1-based line where parsing failed.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// A crossover exceeded its dynamic-programming table budget. The operation
// aborts without a partial result; callers decide how to continue.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace graybox
