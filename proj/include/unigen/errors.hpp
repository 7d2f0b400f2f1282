#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unigen {

// Error categories, each with a fixed process exit code used by the CLI.
enum class ErrorKind {
  Domain = 1,       // misuse of an operation (range, truncation window, bad argument)
  Parse = 2,        // value-expression / character-file / flag parse failure
  Pole = 3,         // pole at t = 0, zero series denominator, singular moment operator
  Convergence = 4,  // p-adic convergence precondition, divergent zeta ratio
  Tolerance = 5,    // numeric comparison exceeded its tolerance
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  int exit_code() const { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse, what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what), position_(0) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(ErrorKind::Pole, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error(ErrorKind::Convergence, what) {}
};

class ToleranceError : public Error {
 public:
  explicit ToleranceError(const std::string& what) : Error(ErrorKind::Tolerance, what) {}
};

// Raised when a requested coefficient lies beyond the known truncation window.
class InsufficientTruncationError : public DomainError {
 public:
  explicit InsufficientTruncationError(const std::string& what) : DomainError(what) {}
};

}  // namespace unigen
