#pragma once

#include "ultraforest/space.hpp"
#include "ultraforest/tree.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ultraforest {

/// The class catalog shared by classify and the hereditary auditor.
enum class ClassId {
  U,                  ///< |Sp(X)| = |X|
  D,                  ///< injective internal labels
  StrictlyBinary,
  R,                  ///< |Iso(X)| = 2
  RTilde,             ///< one inner node per level except the last
  BallPreserving,
  LabelsSameLevel,
  StrictlyNary,       ///< strictly n-ary for some n >= 3
  T,                  ///< conditions (A) and (B)
  TSI,                ///< determined by shape and spectrum
  Homogeneous,
  LeavesSameLevel,
  PerfectNary,        ///< perfect strictly n-ary for some n >= 2
  UnrootedGenerated,
};

std::span<const ClassId> all_classes();
std::string_view class_name(ClassId id);
/// Accepts the names printed by class_name; throws Error(UnknownClass).
ClassId parse_class(std::string_view name);
/// Whether the class is closed under taking subspaces.
bool is_hereditary_class(ClassId id);

/// A yes/no answer together with the data that justifies it.
struct Verdict {
  bool holds = false;
  nlohmann::json certificate = nlohmann::json::object();

  explicit operator bool() const noexcept { return holds; }
};

// Structural predicates on the representing tree. Each one has a
// space-side counterpart in oracles.hpp.

Verdict is_class_U(const Space& space);
Verdict has_injective_internal_labels(const RootedTree& tree);
Verdict is_strictly_binary(const RootedTree& tree);
Verdict is_strictly_nary(const RootedTree& tree, std::size_t n);
/// The n for which the tree is strictly n-ary, if all internal out-degrees agree.
std::optional<std::size_t> strict_arity(const RootedTree& tree);
/// (n-1)|B_Y| + 1 = n|Y| for every ball Y = L(T_v), with |B_Y| = |V(T_v)|.
Verdict ball_formula_check(const RootedTree& tree, std::size_t n);
/// n when the tree is strictly n-ary and all leaves share one level.
std::optional<std::size_t> is_perfect_strictly_nary(const RootedTree& tree);
Verdict is_class_R(const RootedTree& tree);
Verdict is_class_R_tilde(const RootedTree& tree);
Verdict is_class_T(const RootedTree& tree);
Verdict tsi_shape_guarantee(const RootedTree& tree);
/// Every pair of distinct internal nodes on one level sits at level h-1 and
/// has equal out-degrees. Characterizes TSI when labels are injective.
Verdict tsi_injective(const RootedTree& tree);
Verdict is_homogeneous(const RootedTree& tree);
Verdict leaves_same_level(const RootedTree& tree);
Verdict labels_same_level(const RootedTree& tree);
Verdict is_ball_preserving_class(const RootedTree& tree);
Verdict is_unrooted_generated(const RootedTree& tree);

struct EquidistantPartition {
  std::vector<PointSet> balls;
  Rational distance{0};
};

/// Children balls of the node spanning `ball`, checked to be disjoint,
/// pairwise equidistant and covering. Throws Error(NotABall) or
/// Error(SingularBall).
std::optional<EquidistantPartition> equidistant_partition(const Space& space, const PointSet& ball);

/// Membership of a space in a catalog class. Throws Error(SingletonSpace)
/// for one-point spaces, and Error(TooLarge) for TSI when neither
/// structural theorem applies and the tree is beyond the oracle's reach.
bool in_class(const Space& space, const RootedTree& tree, ClassId id);
bool in_class(const Space& space, ClassId id);

struct ClassEntry {
  ClassId id;
  std::optional<bool> holds;  ///< empty when undecidable at this size
  nlohmann::json certificate;
};

struct ClassReport {
  std::size_t points = 0;
  std::vector<Rational> spectrum;
  std::size_t balls = 0;
  std::size_t height = 0;
  std::size_t max_out_degree = 0;
  std::string self_isometries;
  std::vector<ClassEntry> entries;
};

ClassReport classify(const Space& space);
nlohmann::json to_json(const ClassReport& report);
std::string to_text(const ClassReport& report);

}  // namespace ultraforest
