#pragma once

#include <stdexcept>
#include <string>

namespace fk {

enum class ErrorKind { Parse, Validation, Precondition, Assertion, Io };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorKind::Parse,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

[[noreturn]] inline void fail_precondition(const std::string& what) {
  throw Error(ErrorKind::Precondition, what);
}

// Process exit code for an error category (0 is success).
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Precondition:
    case ErrorKind::Validation:
      return 2;
    case ErrorKind::Assertion:
      return 3;
    case ErrorKind::Parse:
    case ErrorKind::Io:
      return 4;
  }
  return 1;
}

}  // namespace fk
