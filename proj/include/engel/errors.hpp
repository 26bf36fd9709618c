#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace engel {

// Operands live in different ambient spaces, or an index is out of range.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its domain (inhomogeneous input to a
// homogeneous check, zero form passed to class_of, ...).
class precondition_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace engel
