#pragma once

#include <stdexcept>
#include <string>

namespace degbound {

/// An index formula evaluated outside its domain (AZI on a (1,1) edge).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input exceeds the size an exact or exhaustive routine is configured for.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed graph text. Line and column are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(format(what, line, column)), message_(what), line_(line), column_(column) {}

  const std::string& message() const noexcept { return message_; }

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    std::string out = what;
    if (line > 0 || column > 0) {
      out += " (";
      if (line > 0) out += "line " + std::to_string(line);
      if (line > 0 && column > 0) out += ", ";
      if (column > 0) out += "column " + std::to_string(column);
      out += ")";
    }
    return out;
  }

  std::string message_;
  int line_;
  int column_;
};

}  // namespace degbound
