#include "ultraforest/unrooted.hpp"

#include "ultraforest/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace ultraforest {

UnrootedTree::UnrootedTree(std::vector<Vertex> vertices, const std::vector<std::pair<PointId, PointId>>& edges)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n == 0) throw Error(Errc::InvalidUnrootedTree, "a tree needs at least one vertex");
  std::unordered_map<PointId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(vertices_[i].id, i).second)
      throw Error(Errc::InvalidUnrootedTree, "vertex '" + vertices_[i].id + "' listed twice", {vertices_[i].id});
    if (vertices_[i].label < Rational(0))
      throw Error(Errc::InvalidUnrootedTree, "vertex '" + vertices_[i].id + "' has negative label",
                  {vertices_[i].id});
  }
  if (edges.size() != n - 1)
    throw Error(Errc::InvalidUnrootedTree,
                std::to_string(edges.size()) + " edges for " + std::to_string(n) + " vertices; a tree needs n-1");
  adjacency_.assign(n, {});
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw Error(Errc::InvalidUnrootedTree, "edge {" + a + "," + b + "} uses an unknown vertex", {a, b});
    if (ia->second == ib->second) throw Error(Errc::InvalidUnrootedTree, "loop at '" + a + "'", {a});
    edges_.emplace_back(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
    adjacency_[ia->second].push_back(ib->second);
    adjacency_[ib->second].push_back(ia->second);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error(Errc::InvalidUnrootedTree, "repeated edge");
  // n-1 edges plus connectivity means acyclic.
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> todo{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!todo.empty()) {
    auto v = todo.back();
    todo.pop_back();
    for (auto w : adjacency_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        todo.push_back(w);
      }
  }
  if (reached != n) throw Error(Errc::InvalidUnrootedTree, "edges do not connect all vertices");
}

std::size_t UnrootedTree::index_of(const PointId& v) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == v) return i;
  throw Error(Errc::UnknownVertex, "vertex '" + v + "' is not in the tree", {v});
}

std::vector<std::pair<PointId, PointId>> UnrootedTree::edge_ids() const {
  std::vector<std::pair<PointId, PointId>> out;
  for (const auto& [a, b] : edges_) {
    const auto& x = vertices_[a].id;
    const auto& y = vertices_[b].id;
    if (natural_less(y, x))
      out.emplace_back(y, x);
    else
      out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) {
    if (p.first != q.first) return natural_less(p.first, q.first);
    return natural_less(p.second, q.second);
  });
  return out;
}

namespace {

// Largest label on the path from `source` to every vertex, endpoints included.
std::vector<Rational> path_maxima(const UnrootedTree& tree, std::size_t source) {
  std::vector<Rational> best(tree.size(), Rational(-1));
  best[source] = tree.label(source);
  std::vector<std::size_t> todo{source};
  while (!todo.empty()) {
    auto v = todo.back();
    todo.pop_back();
    for (auto w : tree.neighbors(v))
      if (best[w] < Rational(0)) {
        best[w] = std::max(best[v], tree.label(w));
        todo.push_back(w);
      }
  }
  return best;
}

}  // namespace

Rational dl_distance(const UnrootedTree& tree, const PointId& u, const PointId& v) {
  const std::size_t iu = tree.index_of(u);
  const std::size_t iv = tree.index_of(v);
  if (iu == iv) return Rational(0);
  return path_maxima(tree, iu)[iv];
}

EdgeCheck generates_ultrametric(const UnrootedTree& tree) {
  for (const auto& [a, b] : tree.edges())
    if (tree.label(a) == Rational(0) && tree.label(b) == Rational(0)) return EdgeCheck{false, std::make_pair(tree.id(a), tree.id(b))};
  return {};
}

Space space_from_unrooted(const UnrootedTree& tree) {
  if (auto check = generates_ultrametric(tree); !check.ok) {
    const auto& [a, b] = *check.violating_edge;
    throw Error(Errc::NotUltrametricGenerating, "both ends of edge {" + a + "," + b + "} are labeled 0", {a, b});
  }
  const std::size_t n = tree.size();
  std::vector<std::vector<Rational>> matrix(n);
  std::vector<PointId> ids;
  for (std::size_t i = 0; i < n; ++i) {
    matrix[i] = path_maxima(tree, i);
    matrix[i][i] = 0;
    ids.push_back(tree.id(i));
  }
  return validate_space(matrix, ids);
}

LeafChildCheck has_leaf_child_everywhere(const RootedTree& tree) {
  for (NodeId v : tree.internal_nodes()) {
    const auto& ch = tree.children(v);
    if (std::none_of(ch.begin(), ch.end(), [&](NodeId c) { return tree.is_leaf(c); })) return LeafChildCheck{false, v};
  }
  return {};
}

UnrootedTree unrooted_from_representing(const RootedTree& tree) {
  if (auto check = has_leaf_child_everywhere(tree); !check.ok)
    throw Error(Errc::MissingLeafChild,
                "internal node " + std::to_string(*check.offending_node) + " (label " +
                    to_string(tree.label(*check.offending_node)) + ") has no leaf child",
                {std::to_string(*check.offending_node)});

  std::vector<UnrootedTree::Vertex> vertices;
  std::vector<std::pair<PointId, PointId>> edges;
  if (tree.is_leaf(tree.root())) return UnrootedTree({{tree.point(tree.root()), Rational(0)}}, {});

  // (node, vertex its chain attaches to); children are already in canonical order.
  std::vector<std::pair<NodeId, std::optional<PointId>>> todo{{tree.root(), std::nullopt}};
  while (!todo.empty()) {
    auto [v, anchor] = todo.back();
    todo.pop_back();
    std::optional<PointId> previous = anchor;
    for (NodeId c : tree.children(v)) {
      if (!tree.is_leaf(c)) continue;
      vertices.push_back({tree.point(c), tree.label(v)});
      if (previous) edges.emplace_back(*previous, tree.point(c));
      previous = tree.point(c);
    }
    const auto& ch = tree.children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it)
      if (!tree.is_leaf(*it)) todo.emplace_back(*it, previous);
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const UnrootedTree::Vertex& a, const UnrootedTree::Vertex& b) { return natural_less(a.id, b.id); });
  return UnrootedTree(std::move(vertices), edges);
}

}  // namespace ultraforest
