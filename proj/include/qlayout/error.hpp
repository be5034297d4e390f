#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlayout {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported OPENQASM input. Line and column are 1-based.
class QasmError : public Error {
 public:
  QasmError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class CouplingError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class TimeoutError : public Error {
 public:
  using Error::Error;
};

/// An action whose preconditions do not hold. `step` is the 0-based action index.
class ReplayError : public Error {
 public:
  ReplayError(std::size_t step, const std::string& what)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class PlanFormatError : public Error {
 public:
  using Error::Error;
};

class RecoveryError : public Error {
 public:
  using Error::Error;
};

}  // namespace qlayout
