#include "tess/error.hpp"

namespace tess {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::TableMismatch: return "TableMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotComplanar: return "NotComplanar";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::DegenerateStock: return "DegenerateStock";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnsupportedNesting: return "UnsupportedNesting";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_usage_error(ErrorKind kind) {
  return kind == ErrorKind::SyntaxError ||
         kind == ErrorKind::UnsupportedNesting ||
         kind == ErrorKind::InvalidArgument;
}

SyntaxError::SyntaxError(std::size_t position, std::string expected,
                         ErrorKind kind)
    : Error(kind, "at position " + std::to_string(position) + ": expected " +
                      expected),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace tess
