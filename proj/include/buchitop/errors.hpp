#pragma once

#include <stdexcept>
#include <string>

namespace buchitop {

/// Input text did not conform to one of the file formats.
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

/// A construction grew past its state budget before completing.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace buchitop
