#include "subres/error.hpp"

namespace subres {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSquareMatrix: return "NonSquareMatrix";
    case ErrorCode::UnknownColumnLabel: return "UnknownColumnLabel";
    case ErrorCode::ColumnMismatch: return "ColumnMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::WrongCardinality: return "WrongCardinality";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::DuplicateMonomial: return "DuplicateMonomial";
    case ErrorCode::InvalidSelection: return "InvalidSelection";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadOrderRange: return "BadOrderRange";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::SingularVandermonde: return "SingularVandermonde";
    case ErrorCode::ExtraneousFactorVanishes: return "ExtraneousFactorVanishes";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::DuplicateAxisValue: return "DuplicateAxisValue";
    case ErrorCode::SingularTransform: return "SingularTransform";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace subres
