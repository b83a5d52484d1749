#include "origami/errors.hpp"

namespace origami {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IncompatibleTowers: return "IncompatibleTowers";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegenerateTrisection: return "DegenerateTrisection";
    case ErrorCode::TowerDepthExceeded: return "TowerDepthExceeded";
    case ErrorCode::ComputationLimit: return "ComputationLimit";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotTotallyReal: return "NotTotallyReal";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::IdenticalLines: return "IdenticalLines";
    case ErrorCode::PointNotOnLine: return "PointNotOnLine";
    case ErrorCode::NoRealFold: return "NoRealFold";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::InvalidTrace: return "InvalidTrace";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotAcute: return "NotAcute";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::ComplexPencil: return "ComplexPencil";
    case ErrorCode::NotDegenerate: return "NotDegenerate";
    case ErrorCode::ComplexLinePair: return "ComplexLinePair";
    case ErrorCode::DegenerateIntersection: return "DegenerateIntersection";
    case ErrorCode::UnknownRecipe: return "UnknownRecipe";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace origami
