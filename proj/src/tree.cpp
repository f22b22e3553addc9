#include "ultraforest/tree.hpp"

#include "ultraforest/canonical.hpp"
#include "ultraforest/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace ultraforest {

TreeSpec leaf(PointId point) {
  TreeSpec s;
  s.point = std::move(point);
  return s;
}

TreeSpec node(Rational label, std::vector<TreeSpec> children) {
  TreeSpec s;
  s.label = label;
  s.children = std::move(children);
  return s;
}

namespace {

void check_spec(const TreeSpec& spec, std::unordered_set<PointId>& seen) {
  if (spec.children.empty()) {
    if (!spec.point) throw Error(Errc::InvalidTree, "leaf without a point");
    if (spec.label != Rational(0))
      throw Error(Errc::InvalidTree, "leaf '" + *spec.point + "' has label " + to_string(spec.label) + ", expected 0",
                  {*spec.point});
    if (!seen.insert(*spec.point).second)
      throw Error(Errc::DuplicatePoint, "point '" + *spec.point + "' labels two leaves", {*spec.point});
    return;
  }
  if (spec.point)
    throw Error(Errc::InvalidTree, "internal node carries point '" + *spec.point + "'", {*spec.point});
  if (spec.children.size() < 2)
    throw Error(Errc::InvalidTree, "internal node labeled " + to_string(spec.label) + " has a single child",
                {to_string(spec.label)});
  for (const auto& child : spec.children)
    if (!(child.label < spec.label))
      throw Error(Errc::LabelMonotonicityViolation,
                  "child label " + to_string(child.label) + " is not below parent label " + to_string(spec.label),
                  {to_string(spec.label), to_string(child.label)});
  for (const auto& child : spec.children) check_spec(child, seen);
}

}  // namespace

RootedTree::RootedTree(const TreeSpec& spec) {
  std::unordered_set<PointId> seen;
  check_spec(spec, seen);

  // Provisional preorder layout straight from the spec.
  RootedTree raw;
  std::vector<std::pair<const TreeSpec*, std::optional<NodeId>>> stack{{&spec, std::nullopt}};
  while (!stack.empty()) {
    auto [s, parent] = stack.back();
    stack.pop_back();
    const NodeId id = raw.nodes_.size();
    Node n;
    n.label = s->label;
    n.point = s->point;
    n.parent = parent;
    raw.nodes_.push_back(std::move(n));
    if (parent) raw.nodes_[*parent].children.push_back(id);
    for (auto it = s->children.rbegin(); it != s->children.rend(); ++it) stack.emplace_back(&*it, id);
  }
  raw.finish();

  const auto codes = node_codes(raw, CodeMode::Labeled);
  for (auto& n : raw.nodes_)
    std::sort(n.children.begin(), n.children.end(), [&](NodeId a, NodeId b) {
      if (codes[a] != codes[b]) return codes[a] < codes[b];
      return natural_less(raw.nodes_[a].leaf_set.front(), raw.nodes_[b].leaf_set.front());
    });

  // Renumber in preorder of the sorted tree.
  std::vector<NodeId> order;
  order.reserve(raw.nodes_.size());
  std::vector<NodeId> todo{0};
  while (!todo.empty()) {
    NodeId v = todo.back();
    todo.pop_back();
    order.push_back(v);
    const auto& ch = raw.nodes_[v].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) todo.push_back(*it);
  }
  std::vector<NodeId> new_id(order.size());
  for (NodeId i = 0; i < order.size(); ++i) new_id[order[i]] = i;
  nodes_.resize(order.size());
  for (NodeId i = 0; i < order.size(); ++i) {
    Node& src = raw.nodes_[order[i]];
    Node& dst = nodes_[i];
    dst.label = src.label;
    dst.point = std::move(src.point);
    if (src.parent) dst.parent = new_id[*src.parent];
    for (NodeId c : src.children) dst.children.push_back(new_id[c]);
  }
  finish();
}

void RootedTree::finish() {
  // Children always carry larger ids than their parent (preorder), so a
  // reverse sweep visits every subtree before its root.
  height_ = 0;
  max_out_degree_ = 0;
  for (auto& n : nodes_) {
    n.level = n.parent ? nodes_[*n.parent].level + 1 : 0;
    height_ = std::max(height_, n.level);
    max_out_degree_ = std::max(max_out_degree_, n.children.size());
  }
  for (NodeId v = nodes_.size(); v-- > 0;) {
    Node& n = nodes_[v];
    n.leaf_set.clear();
    if (n.children.empty()) {
      n.leaf_set.push_back(*n.point);
      continue;
    }
    for (NodeId c : n.children) n.leaf_set.insert(n.leaf_set.end(), nodes_[c].leaf_set.begin(), nodes_[c].leaf_set.end());
    std::sort(n.leaf_set.begin(), n.leaf_set.end(), natural_less);
  }
}

const RootedTree::Node& RootedTree::at(NodeId v) const {
  if (v >= nodes_.size())
    throw Error(Errc::UnknownNode, "node " + std::to_string(v) + " does not exist", {std::to_string(v)});
  return nodes_[v];
}

const PointId& RootedTree::point(NodeId v) const {
  const Node& n = at(v);
  if (!n.point) throw Error(Errc::InvalidArgument, "node " + std::to_string(v) + " is not a leaf");
  return *n.point;
}

std::optional<NodeId> RootedTree::parent(NodeId v) const { return at(v).parent; }

NodeId RootedTree::leaf_of(const PointId& point) const {
  for (NodeId v = 0; v < nodes_.size(); ++v)
    if (nodes_[v].point && *nodes_[v].point == point) return v;
  throw Error(Errc::UnknownPoint, "point '" + point + "' is not a leaf of the tree", {point});
}

std::vector<NodeId> RootedTree::internal_nodes() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < nodes_.size(); ++v)
    if (!nodes_[v].children.empty()) out.push_back(v);
  return out;
}

std::vector<NodeId> RootedTree::leaves() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < nodes_.size(); ++v)
    if (nodes_[v].children.empty()) out.push_back(v);
  return out;
}

std::vector<PointId> RootedTree::points() const {
  std::vector<PointId> out;
  for (const auto& n : nodes_)
    if (n.point) out.push_back(*n.point);
  return out;
}

TreeSpec RootedTree::to_spec() const { return to_spec(root()); }

TreeSpec RootedTree::to_spec(NodeId v) const {
  const Node& n = at(v);
  TreeSpec s;
  s.label = n.label;
  s.point = n.point;
  for (NodeId c : n.children) s.children.push_back(to_spec(c));
  return s;
}

bool operator==(const RootedTree& a, const RootedTree& b) {
  if (a.nodes_.size() != b.nodes_.size()) return false;
  for (NodeId v = 0; v < a.nodes_.size(); ++v) {
    const auto& x = a.nodes_[v];
    const auto& y = b.nodes_[v];
    if (x.label != y.label || x.point != y.point || x.children != y.children) return false;
  }
  return true;
}

NodeInfo node_info(const RootedTree& tree, NodeId v) {
  return NodeInfo{tree.level(v), tree.out_degree(v), tree.leaf_set(v)};
}

std::size_t height(const RootedTree& tree) { return tree.height(); }
std::size_t max_out_degree(const RootedTree& tree) { return tree.max_out_degree(); }

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Splits `members` (indices into space) into the parts of its diametrical
// graph. Returns the diameter rank alongside.
std::pair<std::uint32_t, std::vector<std::vector<std::size_t>>> split(const Space& space,
                                                                     const std::vector<std::size_t>& members) {
  const std::size_t m = members.size();
  std::uint32_t diam = 0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) diam = std::max(diam, space.rank(members[a], members[b]));
  DisjointSets sets(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (space.rank(members[a], members[b]) < diam) sets.unite(a, b);
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> slot(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t r = sets.find(a);
    if (slot[r] == m) {
      slot[r] = parts.size();
      parts.emplace_back();
    }
    parts[slot[r]].push_back(members[a]);
  }
  return {diam, std::move(parts)};
}

TreeSpec build_spec(const Space& space, const std::vector<std::size_t>& members) {
  if (members.size() == 1) return leaf(space.point(members.front()));
  auto [diam, parts] = split(space, members);
  TreeSpec s;
  s.label = space.spectrum()[diam];
  s.children.reserve(parts.size());
  for (const auto& part : parts) s.children.push_back(build_spec(space, part));
  return s;
}

}  // namespace

std::vector<PointSet> multipartite_parts(const Space& space) {
  if (space.size() < 2) throw Error(Errc::SingletonSpace, "the diametrical graph needs at least two points");
  std::vector<std::size_t> all(space.size());
  std::iota(all.begin(), all.end(), 0);
  auto parts = split(space, all).second;
  std::vector<PointSet> out;
  for (const auto& part : parts) {
    std::vector<PointId> ids;
    for (auto i : part) ids.push_back(space.point(i));
    out.push_back(make_point_set(std::move(ids)));
  }
  std::sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return natural_less(a.front(), b.front());
  });
  return out;
}

RootedTree build_representing_tree(const Space& space) {
  std::vector<std::size_t> all(space.size());
  std::iota(all.begin(), all.end(), 0);
  return RootedTree(build_spec(space, all));
}

Space tree_to_space(const RootedTree& tree, std::span<const PointId> order) {
  std::vector<PointId> points;
  if (order.empty()) {
    points = tree.leaf_set(tree.root());
  } else {
    points.assign(order.begin(), order.end());
    if (make_point_set(points) != tree.leaf_set(tree.root()))
      throw Error(Errc::InvalidArgument, "point order does not list exactly the leaves of the tree");
  }
  const std::size_t n = points.size();
  std::unordered_map<PointId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(points[i], i);

  std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n, Rational(0)));
  for (NodeId v : tree.internal_nodes()) {
    const auto& ch = tree.children(v);
    for (std::size_t a = 0; a < ch.size(); ++a)
      for (std::size_t b = a + 1; b < ch.size(); ++b)
        for (const auto& x : tree.leaf_set(ch[a]))
          for (const auto& y : tree.leaf_set(ch[b])) {
            const std::size_t i = index.at(x), j = index.at(y);
            matrix[i][j] = matrix[j][i] = tree.label(v);
          }
  }
  return validate_space(matrix, points);
}

std::vector<PointSet> ballean(const RootedTree& tree) {
  std::vector<PointSet> out;
  out.reserve(tree.node_count());
  for (NodeId v = 0; v < tree.node_count(); ++v) out.push_back(tree.leaf_set(v));
  return out;
}

}  // namespace ultraforest
