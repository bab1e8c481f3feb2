#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tiematch {

enum class ErrorCode {
  AsymmetricAdjacency,
  DuplicateEntry,
  IdOutOfRange,
  SyntaxError,
  ScriptViolation,
  NonTermination,
  DegreeViolation,
  InstanceTooLarge,
  StructureViolation,
  PreconditionViolated,
  Undefined,
  ChargeLeak,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by the text parsers. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, int column, const std::string& what)
      : Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tiematch
