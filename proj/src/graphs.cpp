#include "ultraforest/graphs.hpp"

#include "ultraforest/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace ultraforest {

SimpleGraph::SimpleGraph(std::vector<PointId> vertices, const std::vector<std::pair<PointId, PointId>>& edges)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(Errc::InvalidGraph, "a graph needs at least one vertex");
  std::unordered_map<PointId, std::size_t> index;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!index.emplace(vertices_[i], i).second)
      throw Error(Errc::InvalidGraph, "vertex '" + vertices_[i] + "' listed twice", {vertices_[i]});
  const std::size_t n = vertices_.size();
  adj_.assign(n * n, 0);
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw Error(Errc::InvalidGraph, "edge {" + a + "," + b + "} uses an unknown vertex", {a, b});
    if (ia->second == ib->second) throw Error(Errc::InvalidGraph, "loop at '" + a + "'", {a});
    adj_[ia->second * n + ib->second] = adj_[ib->second * n + ia->second] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (adj_[i * n + j]) edges_.emplace_back(i, j);
}

std::size_t SimpleGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < vertex_count(); ++j) d += adj_[i * vertex_count() + j];
  return d;
}

std::size_t SimpleGraph::index_of(const PointId& v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) throw Error(Errc::UnknownVertex, "vertex '" + v + "' is not in the graph", {v});
  return static_cast<std::size_t>(it - vertices_.begin());
}

SimpleGraph SimpleGraph::induced(const PointSet& keep) const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < vertex_count(); ++i)
    if (std::binary_search(keep.begin(), keep.end(), vertices_[i], natural_less)) idx.push_back(i);
  SimpleGraph g;
  const std::size_t m = idx.size();
  for (auto i : idx) g.vertices_.push_back(vertices_[i]);
  g.adj_.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) g.adj_[a * m + b] = adj_[idx[a] * vertex_count() + idx[b]];
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (g.adj_[a * m + b]) g.edges_.emplace_back(a, b);
  return g;
}

SimpleGraph level_graph(const Space& space, const Rational& r) {
  if (r == Rational(0)) throw Error(Errc::ZeroRadius, "level graphs are defined for nonzero r only");
  const auto& spec = space.spectrum();
  auto it = std::lower_bound(spec.begin(), spec.end(), r);
  if (it == spec.end() || *it != r)
    throw Error(Errc::ValueNotInSpectrum, to_string(r) + " is not a distance of the space", {to_string(r)});
  const auto rank = static_cast<std::uint32_t>(it - spec.begin());
  std::vector<std::pair<PointId, PointId>> edges;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j)
      if (space.rank(i, j) == rank) edges.emplace_back(space.point(i), space.point(j));
  return SimpleGraph(space.points(), edges);
}

SimpleGraph strip_isolated(const SimpleGraph& g) {
  std::vector<PointId> keep;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (g.degree(i) > 0) keep.push_back(g.vertices()[i]);
  if (keep.empty()) throw Error(Errc::AllVerticesIsolated, "every vertex is isolated");
  return g.induced(make_point_set(std::move(keep)));
}

namespace {

// Components of the graph whose adjacency is `linked(i, j)`.
template <class Linked>
std::vector<std::vector<std::size_t>> components(std::size_t n, Linked linked) {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> todo{s};
    comp[s] = id;
    while (!todo.empty()) {
      std::size_t v = todo.back();
      todo.pop_back();
      out.back().push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (comp[w] < 0 && w != v && linked(v, w)) {
          comp[w] = id;
          todo.push_back(w);
        }
    }
  }
  return out;
}

std::vector<PointSet> to_point_sets(const SimpleGraph& g, const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<PointSet> out;
  for (const auto& grp : groups) {
    std::vector<PointId> ids;
    for (auto i : grp) ids.push_back(g.vertices()[i]);
    out.push_back(make_point_set(std::move(ids)));
  }
  std::sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return natural_less(a.front(), b.front());
  });
  return out;
}

}  // namespace

std::vector<PointSet> connected_components(const SimpleGraph& g) {
  return to_point_sets(g, components(g.vertex_count(), [&](std::size_t a, std::size_t b) { return g.adjacent(a, b); }));
}

std::optional<std::vector<PointSet>> complete_multipartite_parts(const SimpleGraph& g) {
  auto groups = components(g.vertex_count(), [&](std::size_t a, std::size_t b) { return !g.adjacent(a, b); });
  if (groups.size() < 2) return std::nullopt;
  // Pairs in different complement components are adjacent by construction;
  // what remains is that each part is an independent set.
  for (const auto& grp : groups)
    for (std::size_t a = 0; a < grp.size(); ++a)
      for (std::size_t b = a + 1; b < grp.size(); ++b)
        if (g.adjacent(grp[a], grp[b])) return std::nullopt;
  return to_point_sets(g, groups);
}

std::vector<LevelPiece> decompose_level_graph(const Space& space, const Rational& r, const RootedTree& tree) {
  const SimpleGraph g = strip_isolated(level_graph(space, r));
  std::vector<LevelPiece> pieces;
  for (const auto& comp : connected_components(g)) {
    auto parts = complete_multipartite_parts(g.induced(comp));
    if (!parts)
      throw Error(Errc::InvalidArgument, "a piece of G'_r is not complete multipartite; the tree does not match");
    std::optional<NodeId> match;
    for (NodeId v : tree.internal_nodes())
      if (tree.label(v) == r && tree.leaf_set(v) == comp) match = v;
    if (!match) throw Error(Errc::InvalidArgument, "no node labeled " + to_string(r) + " spans a piece of G'_r");
    std::vector<PointSet> child_sets;
    for (NodeId c : tree.children(*match)) child_sets.push_back(tree.leaf_set(c));
    std::sort(child_sets.begin(), child_sets.end(), [](const PointSet& a, const PointSet& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return natural_less(a.front(), b.front());
    });
    if (child_sets != *parts)
      throw Error(Errc::InvalidArgument, "parts of a piece of G'_r differ from the children of its node");
    pieces.push_back(LevelPiece{*match, std::move(*parts)});
  }
  std::sort(pieces.begin(), pieces.end(), [](const LevelPiece& a, const LevelPiece& b) { return a.node < b.node; });
  std::size_t labeled = 0;
  for (NodeId v : tree.internal_nodes()) labeled += tree.label(v) == r;
  if (labeled != pieces.size())
    throw Error(Errc::InvalidArgument, "the tree has " + std::to_string(labeled) + " nodes labeled " + to_string(r) +
                                           " but G'_r has " + std::to_string(pieces.size()) + " pieces");
  return pieces;
}

}  // namespace ultraforest
