#pragma once

#include "ultraforest/space.hpp"
#include "ultraforest/tree.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ultraforest {

/// Finite simple graph on named vertices. Vertex order is kept as given;
/// edges are stored once with the smaller vertex index first.
class SimpleGraph {
 public:
  SimpleGraph(std::vector<PointId> vertices, const std::vector<std::pair<PointId, PointId>>& edges);

  const std::vector<PointId>& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * vertex_count() + j] != 0; }
  std::size_t degree(std::size_t i) const;
  std::size_t index_of(const PointId& v) const;

  /// Subgraph induced by `keep` (order follows this graph).
  SimpleGraph induced(const PointSet& keep) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  SimpleGraph() = default;

  std::vector<PointId> vertices_;
  std::vector<char> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// G_{r,X}: all points, edges at distance exactly r.
SimpleGraph level_graph(const Space& space, const Rational& r);

/// G': drops isolated vertices. Throws Error(AllVerticesIsolated) when
/// nothing would remain.
SimpleGraph strip_isolated(const SimpleGraph& g);

std::vector<PointSet> connected_components(const SimpleGraph& g);

/// The parts X_1..X_k (k >= 2) if g is complete k-partite, sorted by
/// (size, smallest vertex). Parts are the components of the complement,
/// then checked to be independent sets.
std::optional<std::vector<PointSet>> complete_multipartite_parts(const SimpleGraph& g);

struct LevelPiece {
  NodeId node;                  ///< internal node of T_X labeled r
  std::vector<PointSet> parts;  ///< L(T_c) for the children c of `node`
};

/// Splits G'_{r,X} into its connected pieces, recognizes each as complete
/// multipartite and matches it to the node of `tree` labeled r whose
/// children's leaf sets are the parts. Pieces are ordered by node.
/// Throws Error(ValueNotInSpectrum) / Error(ZeroRadius), and
/// Error(InvalidArgument) if `tree` does not represent `space`.
std::vector<LevelPiece> decompose_level_graph(const Space& space, const Rational& r, const RootedTree& tree);

}  // namespace ultraforest
