#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace navskel {

/// Base of every error raised by the library. `kind()` is a stable short tag
/// used by the command-line tool when it prints machine-parseable errors.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Malformed input text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("parse", "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input is well-formed but violates a structural requirement (self-loop,
/// duplicate link, partition mismatch).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error("argument", what) {}
};

class UnreachableError : public Error {
 public:
  explicit UnreachableError(const std::string& what) : Error("unreachable", what) {}
};

/// The graph has more than one connected component. `first()` and `second()`
/// are two nodes with no path between them.
class ConnectivityError : public Error {
 public:
  ConnectivityError(std::size_t first, std::size_t second, const std::string& what)
      : Error("connectivity", what), first_(first), second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

class DegenerateFitError : public Error {
 public:
  explicit DegenerateFitError(const std::string& what) : Error("degenerate-fit", what) {}
};

}  // namespace navskel
