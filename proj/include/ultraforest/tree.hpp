#pragma once

#include "ultraforest/rational.hpp"
#include "ultraforest/space.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ultraforest {

/// Nested, unvalidated description of a labeled rooted tree. Used to build
/// RootedTree values and as the in-memory form of the tree JSON schema.
struct TreeSpec {
  Rational label{0};
  std::optional<PointId> point;
  std::vector<TreeSpec> children;
};

TreeSpec leaf(PointId point);
TreeSpec node(Rational label, std::vector<TreeSpec> children);

using NodeId = std::size_t;

/// Labeled rooted tree in the shape of a representing tree: leaves carry
/// label 0 and one point, internal nodes carry a positive label strictly
/// larger than every child label and have at least two children.
///
/// Construction normalizes the tree: children are sorted by labeled
/// canonical code (ties broken by the naturally smallest leaf point below
/// them) and nodes are numbered in preorder, so the root is node 0 and two
/// equal trees compare equal with operator==.
class RootedTree {
 public:
  explicit RootedTree(const TreeSpec& spec);

  NodeId root() const noexcept { return 0; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t leaf_count() const noexcept { return nodes_.front().leaf_set.size(); }

  const Rational& label(NodeId v) const { return at(v).label; }
  const std::vector<NodeId>& children(NodeId v) const { return at(v).children; }
  std::size_t out_degree(NodeId v) const { return at(v).children.size(); }
  bool is_leaf(NodeId v) const { return at(v).children.empty(); }
  bool is_internal(NodeId v) const { return !is_leaf(v); }
  /// Point carried by a leaf; throws Error(InvalidArgument) for internal nodes.
  const PointId& point(NodeId v) const;
  std::optional<NodeId> parent(NodeId v) const;
  std::size_t level(NodeId v) const { return at(v).level; }
  /// L(T_v), naturally sorted.
  const PointSet& leaf_set(NodeId v) const { return at(v).leaf_set; }

  NodeId leaf_of(const PointId& point) const;
  std::vector<NodeId> internal_nodes() const;
  std::vector<NodeId> leaves() const;
  /// Leaf points in preorder.
  std::vector<PointId> points() const;

  std::size_t height() const noexcept { return height_; }
  std::size_t max_out_degree() const noexcept { return max_out_degree_; }

  TreeSpec to_spec() const;
  TreeSpec to_spec(NodeId v) const;

  friend bool operator==(const RootedTree& a, const RootedTree& b);

 private:
  struct Node {
    Rational label{0};
    std::vector<NodeId> children;
    std::optional<NodeId> parent;
    std::optional<PointId> point;
    std::size_t level = 0;
    PointSet leaf_set;
  };

  RootedTree() = default;
  const Node& at(NodeId v) const;
  void finish();

  std::vector<Node> nodes_;
  std::size_t height_ = 0;
  std::size_t max_out_degree_ = 0;
};

struct NodeInfo {
  std::size_t level = 0;
  std::size_t out_degree = 0;
  PointSet leaf_set;
};

NodeInfo node_info(const RootedTree& tree, NodeId v);
std::size_t height(const RootedTree& tree);
std::size_t max_out_degree(const RootedTree& tree);

/// Parts of the complete multipartite diametrical graph: the classes of the
/// relation "joined by a chain of pairs at distance < diam X". Sorted by
/// (size, smallest point). Throws Error(SingletonSpace) for |X| = 1.
std::vector<PointSet> multipartite_parts(const Space& space);

RootedTree build_representing_tree(const Space& space);

/// d(x, y) = label of the lowest common ancestor of the leaves {x}, {y}.
/// Points are ordered by `order` when given (it must list exactly the leaf
/// points), otherwise naturally.
Space tree_to_space(const RootedTree& tree, std::span<const PointId> order = {});

/// One ball per node, L(T_v), in node (preorder) order.
std::vector<PointSet> ballean(const RootedTree& tree);

}  // namespace ultraforest
