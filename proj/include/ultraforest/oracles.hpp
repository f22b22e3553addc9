#pragma once

// Space-side characterizations. These read only the distance matrix and
// never consult the representing tree, so they can arbitrate the
// tree-based predicates in classify.hpp.

#include "ultraforest/classify.hpp"
#include "ultraforest/space.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ultraforest {

/// Size limits; larger inputs raise Error(TooLarge).
inline constexpr std::size_t kHamiltonMaxPoints = 7;
inline constexpr std::size_t kBijectionMaxPoints = 7;
inline constexpr std::size_t kPruferMaxPoints = 7;
inline constexpr std::size_t kTsiMaxInternalNodes = 6;

/// {B_r(c) : c in X, r in Sp(X)}, deduplicated, sorted by size then content.
std::vector<PointSet> ballean_bruteforce(const Space& space);

Verdict no_equilateral_triangle(const Space& space);

/// Every Y with |Y| >= 3 has a Hamilton cycle with exactly two edges of
/// maximal weight. Exhaustive over cyclic orders.
Verdict hamilton_oracle_strictly_binary(const Space& space);

/// Backtracking search for an isometry between the subspaces `a` of x and
/// `b` of y. Independent of representing trees.
bool isometric_by_search(const Space& x, const std::vector<std::size_t>& a, const Space& y,
                         const std::vector<std::size_t>& b);

struct IsometryStats {
  std::size_t count = 0;      ///< |Iso(X)|
  std::size_t min_fixed = 0;  ///< min over Iso(X) of the number of fixed points
};

/// Enumerates every self-isometry by backtracking over bijections.
IsometryStats self_isometries_bruteforce(const Space& space);

/// Some z in `ball` has d(z,t) = diam(ball) for every other t in the ball.
Verdict central_point_oracle(const Space& space, const PointSet& ball);

/// All point spectra equal, and balls of equal diameter pairwise isometric.
Verdict homogeneous_oracle(const Space& space);

/// |Spec(X,x)| is the same for every x.
Verdict spec_size_oracle(const Space& space);
/// Every Spec(X,x) is {0} together with a final segment of Sp(X) \ {0}.
Verdict spec_suffix_oracle(const Space& space);
/// Spec(X,x) is the same for every x.
Verdict spec_equal_oracle(const Space& space);
/// V(G'_{r,X}) = X for every nonzero r.
Verdict full_vertex_level_graphs(const Space& space);

/// There is n >= 2 such that, for every nonzero r, every connected piece of
/// G'_{r,X} is complete n-partite with parts of one common size.
Verdict graph_oracle_perfect(const Space& space);
/// For every nonzero r, G'_{r,X} itself is complete n-partite with equal
/// parts, for one common n. The injective-label special case.
Verdict graph_oracle_perfect_injective(const Space& space);

/// Every nonzero r: G'_{r,X} is complete bipartite.
Verdict all_level_graphs_complete_bipartite(const Space& space);
/// Every nonzero r: G'_{r,X} is complete multipartite.
Verdict all_level_graphs_complete_multipartite(const Space& space);
/// Every nonzero r: G'_{r,X} is connected.
Verdict all_level_graphs_connected(const Space& space);
/// For every nonzero r, G'_{r,X} consists of `pieces(r)` complete n-partite
/// components; `pieces` counts the nodes of T_X labeled r.
Verdict level_graphs_union_of_nary(const Space& space, std::size_t n, const RootedTree& tree);
/// Distinct nonsingular balls (brute force) have distinct diameters.
Verdict nonsingular_ball_diameters_distinct(const Space& space);
/// Every nonsingular ball splits into n disjoint equidistant maximal
/// sub-balls (brute force ballean).
Verdict equidistant_split_oracle(const Space& space, std::size_t n);
/// (n-1)|B_Y| + 1 = n|Y| for every ball Y, counting balls of Y by brute force.
Verdict ball_formula_oracle(const Space& space, std::size_t n);

/// Exists a labeled free tree on X whose path-maximum metric is d.
/// Enumerates all |X|^(|X|-2) trees by Pruefer sequence.
Verdict unrooted_generated_oracle(const Space& space);

/// Every labeling of T-bar_X by Sp(X) \ {0} that strictly decreases away
/// from the root and uses every value gives a space isometric to X.
Verdict tsi_oracle(const Space& space);

}  // namespace ultraforest
