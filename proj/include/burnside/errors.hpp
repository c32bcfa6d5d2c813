#ifndef BURNSIDE_ERRORS_HPP
#define BURNSIDE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burnside {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MixedFieldError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class UnsupportedTower : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NonMonicInput : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// Raised when a structural identity that the theory guarantees fails to hold.
/// This always indicates a bug upstream, never a legitimate mathematical outcome.
class StructureViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed literal or file. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string token, std::size_t line = 0, std::size_t column = 0)
      : Error(format(message, token, line, column)),
        message_(message),
        token_(std::move(token)),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  const std::string& token() const { return token_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  ParseError at(std::size_t line, std::size_t column) const { return ParseError(message_, token_, line, column); }

 private:
  static std::string format(const std::string& message, const std::string& token, std::size_t line,
                            std::size_t column) {
    std::string out;
    if (line > 0) out += std::to_string(line) + ":" + std::to_string(column) + ": ";
    out += message;
    if (!token.empty()) out += " (at '" + token + "')";
    return out;
  }

  std::string message_;
  std::string token_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace burnside

#endif  // BURNSIDE_ERRORS_HPP
