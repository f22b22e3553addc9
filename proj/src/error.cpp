#include "ultraforest/error.hpp"

namespace ultraforest {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptySpace: return "EmptySpace";
    case Errc::NotSquare: return "NotSquare";
    case Errc::DuplicatePoint: return "DuplicatePoint";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::DiagonalNonzero: return "DiagonalNonzero";
    case Errc::OffDiagonalZero: return "OffDiagonalZero";
    case Errc::NegativeDistance: return "NegativeDistance";
    case Errc::StrongTriangleViolation: return "StrongTriangleViolation";
    case Errc::UnknownPoint: return "UnknownPoint";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::InvalidTree: return "InvalidTree";
    case Errc::LabelMonotonicityViolation: return "LabelMonotonicityViolation";
    case Errc::UnknownNode: return "UnknownNode";
    case Errc::SingletonSpace: return "SingletonSpace";
    case Errc::ValueNotInSpectrum: return "ValueNotInSpectrum";
    case Errc::ZeroRadius: return "ZeroRadius";
    case Errc::AllVerticesIsolated: return "AllVerticesIsolated";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::InvalidUnrootedTree: return "InvalidUnrootedTree";
    case Errc::NotUltrametricGenerating: return "NotUltrametricGenerating";
    case Errc::MissingLeafChild: return "MissingLeafChild";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SingularBall: return "SingularBall";
    case Errc::NotABall: return "NotABall";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotInClass: return "NotInClass";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::UnknownClass: return "UnknownClass";
    case Errc::ParseError: return "ParseError";
    case Errc::FormatMismatch: return "FormatMismatch";
  }
  return "Unknown";
}

Error::Error(Errc code, std::string message, std::vector<std::string> witness)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace ultraforest
