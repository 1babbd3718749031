#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpa {

/// Raised when an operation is applied outside its domain: unknown vertices,
/// non-hereditary inputs, mismatched rings, infinite enumerations, and so on.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Raised by the text front ends. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lpa
