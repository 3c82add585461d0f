#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dimjump {

// Bad input to an algebraic operation (ring mismatch, zero divisor argument, ...).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A graded matrix entry has the wrong degree.
class DegreeError : public AlgebraError {
 public:
  DegreeError(std::size_t row, std::size_t col, std::string msg)
      : AlgebraError(std::move(msg)), row_(row), col_(col) {}
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

// Text input could not be parsed. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        detail_(msg) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

// An invariant of the engine itself failed. Never caused by user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The work budget installed by WorkBudget was exhausted.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dimjump
