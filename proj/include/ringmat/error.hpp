#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringmat {

/// Raised when an operation is called outside its preconditions
/// (dimension mismatch, index out of range, enumeration cap exceeded).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text readers. Line and column are 1-based; zero means unknown.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ringmat
