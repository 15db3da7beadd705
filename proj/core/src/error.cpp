#include "polyvor/error.hpp"

namespace polyvor {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::NonpositiveOffDiagonal: return "NonpositiveOffDiagonal";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInSimplex: return "NotInSimplex";
    case ErrorKind::NotZeroSum: return "NotZeroSum";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::OddFacetCount: return "OddFacetCount";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::vector<int> indices)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      indices_(std::move(indices)) {}

}  // namespace polyvor
