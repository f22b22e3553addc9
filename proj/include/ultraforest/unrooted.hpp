#pragma once

#include "ultraforest/space.hpp"
#include "ultraforest/tree.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ultraforest {

/// Free tree with a nonnegative label on every vertex. Labels may repeat and
/// need not be monotone along paths.
class UnrootedTree {
 public:
  struct Vertex {
    PointId id;
    Rational label{0};
  };

  /// Throws Error(InvalidUnrootedTree) unless the edges form a spanning tree
  /// on distinct vertices with labels >= 0.
  UnrootedTree(std::vector<Vertex> vertices, const std::vector<std::pair<PointId, PointId>>& edges);

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const PointId& id(std::size_t i) const { return vertices_[i].id; }
  const Rational& label(std::size_t i) const { return vertices_[i].label; }
  const Rational& label(const PointId& v) const { return vertices_[index_of(v)].label; }
  /// Edges as index pairs (smaller first), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t index_of(const PointId& v) const;

  /// Edge set as naturally ordered id pairs, sorted; handy for comparisons.
  std::vector<std::pair<PointId, PointId>> edge_ids() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// d_l(u, v): 0 if u == v, else the largest label on the u-v path,
/// endpoints included. Throws Error(UnknownVertex).
Rational dl_distance(const UnrootedTree& tree, const PointId& u, const PointId& v);

struct EdgeCheck {
  bool ok = true;
  std::optional<std::pair<PointId, PointId>> violating_edge;
};

/// d_l is an ultrametric iff every edge has an endpoint with positive label.
EdgeCheck generates_ultrametric(const UnrootedTree& tree);

/// The space (V(T), d_l), points in vertex order. Throws
/// Error(NotUltrametricGenerating) naming an edge with two zero labels.
Space space_from_unrooted(const UnrootedTree& tree);

struct LeafChildCheck {
  bool ok = true;
  std::optional<NodeId> offending_node;
};

/// Whether every internal node of `tree` has at least one leaf child.
LeafChildCheck has_leaf_child_everywhere(const RootedTree& tree);

/// Builds T(l) from a representing tree in which every internal node has a
/// leaf child. The leaf children of a node v form a path labeled l(v); the
/// path of each internal child of v hangs off the last vertex of v's path.
/// Throws Error(MissingLeafChild) naming the first node without one.
UnrootedTree unrooted_from_representing(const RootedTree& tree);

}  // namespace ultraforest
