#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ultraforest {

enum class Errc {
  // core
  EmptySpace,
  NotSquare,
  DuplicatePoint,
  NotSymmetric,
  DiagonalNonzero,
  OffDiagonalZero,
  NegativeDistance,
  StrongTriangleViolation,
  UnknownPoint,
  EmptySubset,
  // tree
  InvalidTree,
  LabelMonotonicityViolation,
  UnknownNode,
  SingletonSpace,
  // graphs
  ValueNotInSpectrum,
  ZeroRadius,
  AllVerticesIsolated,
  InvalidGraph,
  // unrooted
  UnknownVertex,
  InvalidUnrootedTree,
  NotUltrametricGenerating,
  MissingLeafChild,
  // classify
  TooLarge,
  SingularBall,
  NotABall,
  InvalidArgument,
  // hereditary
  NotInClass,
  BudgetExhausted,
  UnknownClass,
  // io
  ParseError,
  FormatMismatch,
};

std::string_view errc_name(Errc code) noexcept;

/// Domain error carrying a machine-readable kind and the offending items
/// (points, nodes, values) in the order the message names them.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::vector<std::string> witness = {});

  Errc code() const noexcept { return code_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  Errc code_;
  std::vector<std::string> witness_;
};

}  // namespace ultraforest
