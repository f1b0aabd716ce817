#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taitkit {

enum class ErrorKind {
  Syntax,
  MalformedCode,
  DisconnectedAmbient,
  NonPlanar,
  NonRealizable,
  NotBipartite,
  Io,
  Schema,
  NotConnectedDiagram,
  DisconnectedChessboard,
  NotAlternating,
  IndexOutOfRange,
  DimensionMismatch,
  PreconditionFailed,
  InvalidSite,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind maps one-to-one onto the
/// status codes of the C interface.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SchemaError : public Error {
 public:
  SchemaError(std::size_t index, const std::string& what);

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace taitkit
