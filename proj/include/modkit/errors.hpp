#pragma once

#include <stdexcept>
#include <string>

namespace modkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list or JSON input.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Lookup of a vertex id that the graph does not contain.
class KeyError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (size guards, exponents, signs).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested combinatorial object does not exist (no perfect matching,
/// isolated vertex with no cover, ...).
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// Numerical failure inside the convex solver or the active-set loop.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// A result that cannot be normalized into a distribution.
class DegenerateResult : public Error {
 public:
  using Error::Error;
};

}  // namespace modkit
