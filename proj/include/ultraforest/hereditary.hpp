#pragma once

#include "ultraforest/classify.hpp"
#include "ultraforest/space.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ultraforest {

/// The |X| subspaces X \ {x}, in point order. Throws Error(SingletonSpace).
std::vector<Space> one_point_deletions(const Space& space);

struct HereditaryInstance {
  bool holds = true;
  /// A subset outside the class reached by one deletion from a member subset.
  std::optional<PointSet> witness;
};

/// Whether every subspace with at least two points stays in the class.
/// The default search walks one-point deletions from X and only expands
/// subsets that are still members; `full_enumeration` instead tests every
/// subset directly (|X| <= 8). Throws Error(NotInClass) when X itself is
/// not a member, Error(TooLarge) beyond 20 points (8 with full enumeration).
HereditaryInstance is_hereditary_instance(const Space& space, ClassId id, bool full_enumeration = false);

struct Counterexample {
  Space space;
  PointSet subset;
};

/// First enumerated member (2..max_n points, enumeration order) with a
/// one-point deletion outside the class. `budget` caps the number of
/// enumerated spaces examined (0 = unlimited); running out throws
/// Error(BudgetExhausted), which differs from returning nullopt.
std::optional<Counterexample> hereditary_counterexample_search(ClassId id, std::size_t max_n, std::size_t budget = 0);

struct VerifyResult {
  bool holds = true;
  std::size_t members = 0;  ///< class members examined
  std::optional<Counterexample> counterexample;
};

/// Checks one-point-deletion closure over every enumerated member with at
/// most max_n points. Since the enumeration covers every space up to weak
/// similarity and every class is invariant under it, this decides closure
/// under subspaces on that universe.
VerifyResult hereditary_verify(ClassId id, std::size_t max_n);

}  // namespace ultraforest
