#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyvor {

/// Error categories raised by the library. The names are part of the CLI's
/// JSON error object and must stay stable.
enum class ErrorKind {
  ParseError,
  NotSquare,
  NotSymmetric,
  NonzeroDiagonal,
  NonpositiveOffDiagonal,
  TriangleViolation,
  DimensionMismatch,
  NotInSimplex,
  NotZeroSum,
  Infeasible,
  TooLarge,
  ParameterOutOfRange,
  OddFacetCount,
  InvalidArgument,
  NotFound,
  IoError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<int> indices = {});

  ErrorKind kind() const noexcept { return kind_; }
  /// Offending indices (1-based state numbers for metric errors).
  const std::vector<int>& indices() const noexcept { return indices_; }

 private:
  ErrorKind kind_;
  std::vector<int> indices_;
};

}  // namespace polyvor
