#include "ultraforest/gen.hpp"

#include "ultraforest/canonical.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <set>

namespace ultraforest {

namespace {

// A shape as a nested list of children, kept in canonical order.
struct ShapeNode {
  std::vector<ShapeNode> kids;
};

std::string shape_code(const ShapeNode& s) {
  std::vector<std::string> codes;
  for (const auto& k : s.kids) codes.push_back(shape_code(k));
  std::sort(codes.begin(), codes.end());
  std::string out = "(";
  for (const auto& c : codes) out += c;
  return out + ")";
}

struct ShapeTable {
  std::vector<std::vector<ShapeNode>> by_size;
  std::mutex mutex;

  ShapeTable() { by_size.emplace_back(); }

  const std::vector<ShapeNode>& get(std::size_t n) {
    std::lock_guard lock(mutex);
    while (by_size.size() <= n) extend();
    return by_size[n];
  }

  void extend() {
    const std::size_t n = by_size.size();
    std::vector<ShapeNode> out;
    if (n == 1) out.push_back(ShapeNode{});
    if (n >= 2) {
      // Multisets of at least two children, chosen in nondecreasing (size, index) order.
      std::vector<ShapeNode> picked;
      std::function<void(std::size_t, std::size_t, std::size_t)> pick = [&](std::size_t left, std::size_t size,
                                                                             std::size_t index) {
        if (left == 0) {
          if (picked.size() >= 2) out.push_back(ShapeNode{picked});
          return;
        }
        for (std::size_t s = size; s <= left && s < n; ++s) {
          const auto& pool = by_size[s];
          for (std::size_t i = (s == size ? index : 0); i < pool.size(); ++i) {
            picked.push_back(pool[i]);
            pick(left - s, s, i);
            picked.pop_back();
          }
        }
      };
      pick(n, 1, 0);
    }
    std::sort(out.begin(), out.end(), [](const ShapeNode& a, const ShapeNode& b) { return shape_code(a) < shape_code(b); });
    by_size.push_back(std::move(out));
  }
};

ShapeTable& shape_table() {
  static ShapeTable table;
  return table;
}

std::size_t shape_height(const ShapeNode& s) {
  std::size_t h = 0;
  for (const auto& k : s.kids) h = std::max(h, shape_height(k) + 1);
  return h;
}

// Builds a TreeSpec; labels come from `label_of(preorder index of internal node)`.
TreeSpec realize(const ShapeNode& s, std::size_t& next_point, std::size_t& next_internal,
                 const std::function<Rational(std::size_t, const ShapeNode&)>& label_of) {
  if (s.kids.empty()) return leaf("x" + std::to_string(++next_point));
  TreeSpec t;
  t.label = label_of(next_internal++, s);
  for (const auto& k : s.kids) t.children.push_back(realize(k, next_point, next_internal, label_of));
  return t;
}

void collect_internal(const ShapeNode& s, std::optional<std::size_t> parent, std::vector<std::optional<std::size_t>>& parents) {
  if (s.kids.empty()) return;
  const std::size_t me = parents.size();
  parents.push_back(parent);
  for (const auto& k : s.kids) collect_internal(k, me, parents);
}

Rational random_step(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(1, 20), den(1, 8);
  return Rational(num(rng), den(rng));
}

ShapeNode random_shape(std::size_t m, std::mt19937_64& rng) {
  if (m == 1) return ShapeNode{};
  std::uniform_int_distribution<std::size_t> kd(2, std::min<std::size_t>(m, 4));
  const std::size_t k = kd(rng);
  // Each part gets one point, the rest are spread uniformly.
  std::vector<std::size_t> sizes(k, 1);
  std::uniform_int_distribution<std::size_t> part(0, k - 1);
  for (std::size_t i = k; i < m; ++i) ++sizes[part(rng)];
  ShapeNode s;
  for (auto sz : sizes) s.kids.push_back(random_shape(sz, rng));
  return s;
}

TreeSpec random_labels(const ShapeNode& s, std::vector<PointId>& names, std::size_t& next, std::mt19937_64& rng) {
  if (s.kids.empty()) return leaf(names[next++]);
  TreeSpec t;
  Rational top{0};
  for (const auto& k : s.kids) {
    t.children.push_back(random_labels(k, names, next, rng));
    top = std::max(top, t.children.back().label);
  }
  t.label = top + random_step(rng);
  return t;
}

}  // namespace

std::vector<RootedTree> enumerate_shapes(std::size_t n_leaves) {
  std::vector<RootedTree> out;
  if (n_leaves == 0) return out;
  for (const auto& s : shape_table().get(n_leaves)) {
    std::size_t p = 0, q = 0;
    out.emplace_back(realize(s, p, q, [](std::size_t, const ShapeNode& node) {
      return Rational(static_cast<std::int64_t>(shape_height(node)));
    }));
  }
  return out;
}

std::vector<Space> enumerate_spaces(std::size_t n_leaves) {
  std::vector<Space> out;
  if (n_leaves == 0) return out;
  std::set<std::string> seen;
  for (const auto& s : shape_table().get(n_leaves)) {
    std::vector<std::optional<std::size_t>> parents;
    collect_internal(s, std::nullopt, parents);
    const std::size_t k = parents.size();
    if (k == 0) {
      out.push_back(tree_to_space(RootedTree(leaf("x1"))));
      continue;
    }
    std::vector<std::size_t> rank(k, 0);
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
      if (i == k) {
        // Ranks must cover 1..m without gaps.
        std::vector<char> used(k + 1, 0);
        std::size_t m = 0;
        for (auto r : rank) {
          used[r] = 1;
          m = std::max(m, r);
        }
        for (std::size_t r = 1; r <= m; ++r)
          if (!used[r]) return;
        std::size_t p = 0, q = 0;
        RootedTree tree(realize(s, p, q, [&](std::size_t idx, const ShapeNode&) {
          return Rational(static_cast<std::int64_t>(rank[idx]));
        }));
        if (seen.insert(canonical_code(tree, CodeMode::RankLabeled).code).second) out.push_back(tree_to_space(tree));
        return;
      }
      const std::size_t cap = parents[i] ? rank[*parents[i]] - 1 : k;
      for (std::size_t r = 1; r <= cap; ++r) {
        rank[i] = r;
        assign(i + 1);
      }
    };
    assign(0);
  }
  return out;
}

Space random_space(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PointId> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  if (n <= 1) return tree_to_space(RootedTree(leaf(names.empty() ? "x1" : names.front())));
  const ShapeNode shape = random_shape(n, rng);
  std::vector<PointId> order = names;
  std::shuffle(order.begin(), order.end(), rng);
  std::size_t next = 0;
  return tree_to_space(RootedTree(random_labels(shape, order, next, rng)), names);
}

UnrootedTree random_unrooted(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t count = std::max<std::size_t>(n, 1);
  std::vector<UnrootedTree::Vertex> vertices;
  std::uniform_int_distribution<int> zero(0, 3);
  for (std::size_t i = 1; i <= count; ++i)
    vertices.push_back({"x" + std::to_string(i), zero(rng) == 0 ? Rational(0) : random_step(rng)});
  std::vector<std::pair<PointId, PointId>> edges;
  if (count >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, count - 1);
    std::vector<std::size_t> seq(count - 2);
    for (auto& s : seq) s = pick(rng);
    std::vector<std::size_t> degree(count, 1);
    for (auto s : seq) ++degree[s];
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (auto s : seq) {
      std::size_t leaf_v = 0;
      while (degree[leaf_v] != 1) ++leaf_v;
      idx.emplace_back(leaf_v, s);
      --degree[leaf_v];
      --degree[s];
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < count; ++i)
      if (degree[i] == 1) rest.push_back(i);
    idx.emplace_back(rest[0], rest[1]);
    // Every edge needs a positive endpoint label for d_l to separate points.
    for (auto [u, v] : idx) {
      if (vertices[u].label == Rational(0) && vertices[v].label == Rational(0)) vertices[v].label = random_step(rng);
      edges.emplace_back(vertices[u].id, vertices[v].id);
    }
  }
  return UnrootedTree(std::move(vertices), edges);
}

}  // namespace ultraforest
