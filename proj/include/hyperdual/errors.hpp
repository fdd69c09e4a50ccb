#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperdual {

/// Base class for every error raised by the library. `kind()` is a short
/// stable token used by the command line front end.
class Error : public std::runtime_error {
 public:
  Error(const char* kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] const char* kind() const noexcept { return kind_; }

 private:
  const char* kind_;
};

/// Input exceeds a fixed enumeration or word-size ceiling.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& message) : Error("capacity", message) {}
};

/// Malformed structure: out-of-range vertex, empty edge, size mismatch.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error("validation", message) {}
};

/// A numeric argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("domain", message) {}
};

class IsolatedVertexError : public Error {
 public:
  explicit IsolatedVertexError(std::size_t vertex)
      : Error("isolated-vertex",
              "vertex " + std::to_string(vertex) + " belongs to no edge"),
        vertex_(vertex) {}

  [[nodiscard]] std::size_t vertex() const noexcept { return vertex_; }

 private:
  std::size_t vertex_;
};

class NonUniformCouplingError : public Error {
 public:
  explicit NonUniformCouplingError(const std::string& message)
      : Error("non-uniform-coupling", message) {}
};

class NotThreeColorableError : public Error {
 public:
  explicit NotThreeColorableError(const std::string& message)
      : Error("not-three-colorable", message) {}
};

/// Document text is not well-formed; carries a 1-based position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error("syntax", "line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hyperdual
