#pragma once

#include "ultraforest/space.hpp"
#include "ultraforest/tree.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ultraforest {

enum class CodeMode {
  Labeled,      ///< labels as exact "p/q"
  Unlabeled,    ///< shape only
  RankLabeled,  ///< each label replaced by its rank among the tree's labels
};

/// Text token with parenthesis delimiters: a node is "(" + token + sorted
/// child codes + ")". Equal codes iff isomorphic trees in the chosen mode.
struct CanonCode {
  std::string code;
  friend bool operator==(const CanonCode&, const CanonCode&) = default;
  friend auto operator<=>(const CanonCode&, const CanonCode&) = default;
};

CanonCode canonical_code(const RootedTree& tree, CodeMode mode);

/// Code of every subtree T_v, indexed by node.
std::vector<std::string> node_codes(const RootedTree& tree, CodeMode mode);

/// Code of the tree with internal node v labeled by `tokens[v]` instead of
/// its own label (leaves always use "0"). Lets callers compare alternative
/// labelings of one shape without building new trees.
std::string code_with_tokens(const RootedTree& tree, std::span<const std::string> tokens);

bool are_isometric(const Space& x, const Space& y);

/// The order isomorphism Sp(X) -> Sp(Y) as (from, to) pairs.
struct Scaling {
  std::vector<std::pair<Rational, Rational>> pairs;
};

std::optional<Scaling> are_weakly_similar(const Space& x, const Space& y);

using BigInt = boost::multiprecision::cpp_int;

/// |Iso(X)| for the space represented by `tree`: at every internal node,
/// m! for each group of m children with equal labeled code.
BigInt count_self_isometries(const RootedTree& tree);

}  // namespace ultraforest
