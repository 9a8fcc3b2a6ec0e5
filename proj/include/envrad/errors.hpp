#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace envrad {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands were built over different rings or free modules.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The decomposition oracle has no decomposition for a module.  The
/// canonical reduced basis of that module is kept so that callers can
/// produce a fixture for it.
class OracleMiss : public Error {
 public:
  OracleMiss(const std::string& what, std::string canonical_basis)
      : Error(what), canonical_basis_(std::move(canonical_basis)) {}

  const std::string& canonical_basis() const { return canonical_basis_; }

 private:
  std::string canonical_basis_;
};

/// An ascending-chain iteration did not stabilize within its budget.
class IterationLimit : public Error {
 public:
  using Error::Error;
};

/// Syntax or name-resolution error in a session file.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::string token)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message +
              (token.empty() ? std::string() : " (at '" + token + "')")),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

}  // namespace envrad
