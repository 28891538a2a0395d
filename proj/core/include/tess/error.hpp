#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tess {

enum class ErrorKind {
  NotInvertible,
  OrderMismatch,
  ZeroInput,
  TableMismatch,
  ZeroPolynomial,
  NoConvergence,
  NotComplanar,
  DegenerateSpectrum,
  DegenerateStock,
  SyntaxError,
  UnsupportedNesting,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Usage-level errors (bad input text, bad arguments) as opposed to
// computational obstructions such as a zero divisor.
bool is_usage_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected,
              ErrorKind kind = ErrorKind::SyntaxError);

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace tess
