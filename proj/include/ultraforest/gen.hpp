#pragma once

#include "ultraforest/space.hpp"
#include "ultraforest/tree.hpp"
#include "ultraforest/unrooted.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ultraforest {

/// All rooted trees with `n_leaves` leaves whose internal nodes have at
/// least two children, one per isomorphism class, ordered by unlabeled
/// canonical code. Leaves are named x1..xn in preorder; each internal node
/// carries the height of its subtree as a placeholder label.
std::vector<RootedTree> enumerate_shapes(std::size_t n_leaves);

/// One representative per weak-similarity class of spaces on `n_leaves`
/// points: every strictly decreasing rank labeling of every shape, realized
/// with integer labels 1..m, deduplicated by rank-labeled code.
std::vector<Space> enumerate_spaces(std::size_t n_leaves);

/// Reproducible random space on points x1..xn with rational labels.
Space random_space(std::size_t n, std::uint64_t seed);

/// Reproducible random labeled free tree on x1..xn whose d_l is an ultrametric.
UnrootedTree random_unrooted(std::size_t n, std::uint64_t seed);

}  // namespace ultraforest
