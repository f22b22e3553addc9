#include "ultraforest/oracles.hpp"

#include "ultraforest/canonical.hpp"
#include "ultraforest/error.hpp"
#include "ultraforest/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace ultraforest {

using nlohmann::json;

namespace {

Verdict yes(json cert = json::object()) { return Verdict{true, std::move(cert)}; }
Verdict no(json cert) { return Verdict{false, std::move(cert)}; }

void require_at_most(const Space& space, std::size_t limit, const char* what) {
  if (space.size() > limit)
    throw Error(Errc::TooLarge, std::string(what) + " is limited to " + std::to_string(limit) + " points, got " +
                                    std::to_string(space.size()));
}

std::vector<std::uint32_t> spectrum_ranks_of(const Space& space, std::size_t x) {
  std::vector<std::uint32_t> out;
  for (std::size_t y = 0; y < space.size(); ++y) out.push_back(space.rank(x, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}


json rank_values(const Space& space, const std::vector<std::uint32_t>& ranks) {
  json out = json::array();
  for (auto r : ranks) out.push_back(to_string(space.spectrum()[r]));
  return out;
}

PointSet ids_of(const Space& space, const std::vector<std::size_t>& idx) {
  PointSet out;
  for (auto i : idx) out.push_back(space.point(i));
  return make_point_set(std::move(out));
}

Rational diameter_of(const Space& space, const PointSet& ball) {
  Rational d{0};
  for (const auto& a : ball)
    for (const auto& b : ball) d = std::max(d, space.dist(a, b));
  return d;
}

std::vector<std::size_t> indices_of(const Space& space, const PointSet& set) {
  std::vector<std::size_t> out;
  for (const auto& p : set) out.push_back(space.index_of(p));
  return out;
}

// G'_{r,X} for every nonzero r in the spectrum.
template <class Fn>
std::optional<Verdict> for_each_level_graph(const Space& space, Fn&& fn) {
  for (std::size_t k = 1; k < space.spectrum().size(); ++k) {
    const Rational& r = space.spectrum()[k];
    SimpleGraph g = strip_isolated(level_graph(space, r));
    if (auto v = fn(r, g)) return v;
  }
  return std::nullopt;
}

bool all_same_size(const std::vector<PointSet>& parts) {
  return std::all_of(parts.begin(), parts.end(), [&](const PointSet& p) { return p.size() == parts.front().size(); });
}

}  // namespace

std::vector<PointSet> ballean_bruteforce(const Space& space) {
  std::set<PointSet> seen;
  for (std::size_t c = 0; c < space.size(); ++c)
    for (const Rational& r : space.spectrum()) {
      PointSet ball;
      for (std::size_t x = 0; x < space.size(); ++x)
        if (space.dist(c, x) <= r) ball.push_back(space.point(x));
      seen.insert(make_point_set(std::move(ball)));
    }
  std::vector<PointSet> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), natural_less);
  });
  return out;
}

Verdict no_equilateral_triangle(const Space& space) {
  const std::size_t n = space.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (space.rank(a, b) == space.rank(a, c) && space.rank(a, b) == space.rank(b, c))
          return no({{"triangle", {space.point(a), space.point(b), space.point(c)}},
                     {"side", to_string(space.dist(a, b))}});
  return yes();
}

Verdict hamilton_oracle_strictly_binary(const Space& space) {
  require_at_most(space, kHamiltonMaxPoints, "the Hamilton cycle search");
  const std::size_t n = space.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> y;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) y.push_back(i);
    if (y.size() < 3) continue;
    // Fix y[0] first; every cyclic order appears among the permutations of the rest.
    std::vector<std::size_t> order(y.begin() + 1, y.end());
    bool found = false;
    do {
      std::vector<std::size_t> cycle{y.front()};
      cycle.insert(cycle.end(), order.begin(), order.end());
      std::uint32_t top = 0;
      std::size_t count = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto w = space.rank(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (w > top) {
          top = w;
          count = 1;
        } else if (w == top) {
          ++count;
        }
      }
      found = count == 2;
    } while (!found && std::next_permutation(order.begin(), order.end()));
    if (!found) return no({{"subset", ids_of(space, y)}});
  }
  return yes();
}

bool isometric_by_search(const Space& x, const std::vector<std::size_t>& a, const Space& y,
                         const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > kBijectionMaxPoints)
    throw Error(Errc::TooLarge, "the isometry search is limited to " + std::to_string(kBijectionMaxPoints) + " points");
  const std::size_t n = a.size();
  // Sorted distance profile of each point inside its own subspace prunes the search.
  auto profile = [](const Space& s, const std::vector<std::size_t>& idx, std::size_t i) {
    std::vector<Rational> p;
    for (auto j : idx) p.push_back(s.dist(idx[i], j));
    std::sort(p.begin(), p.end());
    return p;
  };
  std::vector<std::vector<Rational>> pa(n), pb(n);
  for (std::size_t i = 0; i < n; ++i) {
    pa[i] = profile(x, a, i);
    pb[i] = profile(y, b, i);
  }
  std::vector<std::size_t> image(n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || pa[i] != pb[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = x.dist(a[i], a[k]) == y.dist(b[j], b[image[k]]);
      if (!ok) continue;
      used[j] = 1;
      image[i] = j;
      if (extend(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return extend(0);
}

IsometryStats self_isometries_bruteforce(const Space& space) {
  require_at_most(space, kBijectionMaxPoints, "the self-isometry enumeration");
  const std::size_t n = space.size();
  IsometryStats stats{0, n};
  std::vector<std::size_t> image(n);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      std::size_t fixed = 0;
      for (std::size_t k = 0; k < n; ++k) fixed += image[k] == k;
      ++stats.count;
      stats.min_fixed = std::min(stats.min_fixed, fixed);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = space.rank(i, k) == space.rank(j, image[k]);
      if (!ok) continue;
      used[j] = 1;
      image[i] = j;
      extend(i + 1);
      used[j] = 0;
    }
  };
  extend(0);
  return stats;
}

Verdict central_point_oracle(const Space& space, const PointSet& ball) {
  const Rational diam = diameter_of(space, ball);
  for (const auto& z : ball) {
    bool all = true;
    for (const auto& t : ball)
      if (t != z && space.dist(z, t) != diam) all = false;
    if (all) return yes({{"center", z}, {"diameter", to_string(diam)}});
  }
  return no({{"ball", ball}, {"diameter", to_string(diam)}});
}

Verdict homogeneous_oracle(const Space& space) {
  require_at_most(space, kBijectionMaxPoints, "the homogeneity search");
  if (auto v = spec_equal_oracle(space); !v) return v;
  const auto balls = ballean_bruteforce(space);
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i + 1; j < balls.size(); ++j) {
      const Rational di = diameter_of(space, balls[i]);
      if (di != diameter_of(space, balls[j])) continue;
      if (!isometric_by_search(space, indices_of(space, balls[i]), space, indices_of(space, balls[j])))
        return no({{"balls", {balls[i], balls[j]}}, {"diameter", to_string(di)}});
    }
  return yes();
}

Verdict spec_size_oracle(const Space& space) {
  const auto first = spectrum_ranks_of(space, 0).size();
  for (std::size_t x = 1; x < space.size(); ++x)
    if (spectrum_ranks_of(space, x).size() != first)
      return no({{"points", {space.point(0), space.point(x)}},
                 {"sizes", {first, spectrum_ranks_of(space, x).size()}}});
  return yes({{"size", first}});
}

Verdict spec_suffix_oracle(const Space& space) {
  const auto top = static_cast<std::uint32_t>(space.spectrum().size() - 1);
  for (std::size_t x = 0; x < space.size(); ++x) {
    auto s = spectrum_ranks_of(space, x);
    // {0} followed by a contiguous run of ranks ending at the top value.
    bool ok = s.size() >= 2 && s.front() == 0 && s.back() == top;
    for (std::size_t i = 2; ok && i < s.size(); ++i) ok = s[i] == s[i - 1] + 1;
    if (!ok) return no({{"point", space.point(x)}, {"spectrum", rank_values(space, s)}});
  }
  return yes();
}

Verdict spec_equal_oracle(const Space& space) {
  const auto first = spectrum_ranks_of(space, 0);
  for (std::size_t x = 1; x < space.size(); ++x)
    if (spectrum_ranks_of(space, x) != first)
      return no({{"points", {space.point(0), space.point(x)}},
                 {"spectra", {rank_values(space, first), rank_values(space, spectrum_ranks_of(space, x))}}});
  return yes({{"spectrum", rank_values(space, first)}});
}

Verdict full_vertex_level_graphs(const Space& space) {
  const std::size_t n = space.size();
  for (std::uint32_t k = 1; k < space.spectrum().size(); ++k)
    for (std::size_t x = 0; x < n; ++x) {
      bool hit = false;
      for (std::size_t y = 0; y < n && !hit; ++y) hit = space.rank(x, y) == k;
      if (!hit) return no({{"r", to_string(space.spectrum()[k])}, {"missing_vertex", space.point(x)}});
    }
  return yes();
}

Verdict graph_oracle_perfect(const Space& space) {
  std::optional<std::size_t> n;
  auto bad = for_each_level_graph(space, [&](const Rational& r, const SimpleGraph& g) -> std::optional<Verdict> {
    for (const auto& comp : connected_components(g)) {
      auto parts = complete_multipartite_parts(g.induced(comp));
      if (!parts) return no({{"r", to_string(r)}, {"component", comp}, {"reason", "not complete multipartite"}});
      if (!all_same_size(*parts)) return no({{"r", to_string(r)}, {"parts", *parts}, {"reason", "unequal part sizes"}});
      if (n && *n != parts->size())
        return no({{"r", to_string(r)}, {"parts", *parts}, {"reason", "part count differs from " + std::to_string(*n)}});
      n = parts->size();
    }
    return std::nullopt;
  });
  if (bad) return *bad;
  return yes({{"n", n.value_or(0)}});
}

Verdict graph_oracle_perfect_injective(const Space& space) {
  std::optional<std::size_t> n;
  auto bad = for_each_level_graph(space, [&](const Rational& r, const SimpleGraph& g) -> std::optional<Verdict> {
    auto parts = complete_multipartite_parts(g);
    if (!parts) return no({{"r", to_string(r)}, {"reason", "not complete multipartite"}});
    if (!all_same_size(*parts)) return no({{"r", to_string(r)}, {"parts", *parts}, {"reason", "unequal part sizes"}});
    if (n && *n != parts->size()) return no({{"r", to_string(r)}, {"parts", *parts}, {"reason", "part count differs"}});
    n = parts->size();
    return std::nullopt;
  });
  if (bad) return *bad;
  return yes({{"n", n.value_or(0)}});
}

Verdict all_level_graphs_complete_bipartite(const Space& space) {
  auto bad = for_each_level_graph(space, [&](const Rational& r, const SimpleGraph& g) -> std::optional<Verdict> {
    auto parts = complete_multipartite_parts(g);
    if (!parts || parts->size() != 2) return no({{"r", to_string(r)}});
    return std::nullopt;
  });
  return bad ? *bad : yes();
}

Verdict all_level_graphs_complete_multipartite(const Space& space) {
  auto bad = for_each_level_graph(space, [&](const Rational& r, const SimpleGraph& g) -> std::optional<Verdict> {
    if (!complete_multipartite_parts(g)) return no({{"r", to_string(r)}});
    return std::nullopt;
  });
  return bad ? *bad : yes();
}

Verdict all_level_graphs_connected(const Space& space) {
  auto bad = for_each_level_graph(space, [&](const Rational& r, const SimpleGraph& g) -> std::optional<Verdict> {
    auto comps = connected_components(g);
    if (comps.size() != 1) return no({{"r", to_string(r)}, {"components", comps}});
    return std::nullopt;
  });
  return bad ? *bad : yes();
}

Verdict level_graphs_union_of_nary(const Space& space, std::size_t n, const RootedTree& tree) {
  auto bad = for_each_level_graph(space, [&](const Rational& r, const SimpleGraph& g) -> std::optional<Verdict> {
    std::size_t p = 0;
    for (NodeId v : tree.internal_nodes()) p += tree.label(v) == r;
    auto comps = connected_components(g);
    if (comps.size() != p) return no({{"r", to_string(r)}, {"components", comps.size()}, {"nodes_labeled_r", p}});
    for (const auto& comp : comps) {
      auto parts = complete_multipartite_parts(g.induced(comp));
      if (!parts || parts->size() != n) return no({{"r", to_string(r)}, {"component", comp}, {"n", n}});
    }
    return std::nullopt;
  });
  return bad ? *bad : yes({{"n", n}});
}

Verdict nonsingular_ball_diameters_distinct(const Space& space) {
  std::map<Rational, PointSet> seen;
  for (const auto& ball : ballean_bruteforce(space)) {
    if (ball.size() < 2) continue;
    const Rational d = diameter_of(space, ball);
    auto [it, inserted] = seen.emplace(d, ball);
    if (!inserted) return no({{"diameter", to_string(d)}, {"balls", {it->second, ball}}});
  }
  return yes();
}

Verdict equidistant_split_oracle(const Space& space, std::size_t n) {
  const auto balls = ballean_bruteforce(space);
  auto subset = [](const PointSet& a, const PointSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end(), natural_less);
  };
  for (const auto& ball : balls) {
    if (ball.size() < 2) continue;
    std::vector<PointSet> inner;
    for (const auto& b : balls)
      if (b.size() < ball.size() && subset(b, ball)) inner.push_back(b);
    std::vector<PointSet> maximal;
    for (const auto& b : inner) {
      bool covered = std::any_of(inner.begin(), inner.end(),
                                 [&](const PointSet& c) { return c.size() > b.size() && subset(b, c); });
      if (!covered) maximal.push_back(b);
    }
    std::size_t total = 0;
    for (const auto& b : maximal) total += b.size();
    if (maximal.size() != n || total != ball.size())
      return no({{"ball", ball}, {"maximal_subballs", maximal}, {"n", n}});
    std::optional<Rational> r;
    for (std::size_t i = 0; i < maximal.size(); ++i)
      for (std::size_t j = i + 1; j < maximal.size(); ++j)
        for (const auto& p : maximal[i])
          for (const auto& q : maximal[j]) {
            const Rational& d = space.dist(p, q);
            if (!r) r = d;
            if (d != *r) return no({{"ball", ball}, {"maximal_subballs", maximal}, {"reason", "not equidistant"}});
          }
  }
  return yes({{"n", n}});
}

Verdict ball_formula_oracle(const Space& space, std::size_t n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "arity must be at least 2");
  for (const auto& ball : ballean_bruteforce(space)) {
    const std::size_t count = ballean_bruteforce(restrict(space, ball)).size();
    if ((n - 1) * count + 1 != n * ball.size())
      return no({{"ball", ball}, {"balls_in_ball", count}, {"n", n}});
  }
  return yes({{"n", n}});
}

Verdict unrooted_generated_oracle(const Space& space) {
  require_at_most(space, kPruferMaxPoints, "the free-tree enumeration");
  const std::size_t n = space.size();
  if (n == 1) return yes({{"edges", json::array()}});
  std::vector<std::size_t> seq(n - 2, 0);
  while (true) {
    // Decode the Pruefer sequence.
    std::vector<std::size_t> degree(n, 1);
    for (auto s : seq) ++degree[s];
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto s : seq) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, s);
      --degree[leaf];
      --degree[s];
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (degree[i] == 1) rest.push_back(i);
    edges.emplace_back(rest[0], rest[1]);

    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    // Largest admissible vertex labels: the lightest incident edge.
    std::vector<std::uint32_t> label(n, UINT32_MAX);
    for (auto [u, v] : edges) {
      label[u] = std::min(label[u], space.rank(u, v));
      label[v] = std::min(label[v], space.rank(u, v));
    }
    bool ok = std::all_of(edges.begin(), edges.end(),
                          [&](auto e) { return std::max(label[e.first], label[e.second]) == space.rank(e.first, e.second); });
    for (std::size_t s = 0; ok && s < n; ++s) {
      // Path maxima of labels from s by DFS.
      std::vector<std::uint32_t> best(n, 0);
      std::vector<char> seen(n, 0);
      std::vector<std::size_t> stack{s};
      seen[s] = 1;
      best[s] = label[s];
      while (!stack.empty() && ok) {
        auto u = stack.back();
        stack.pop_back();
        for (auto w : adj[u]) {
          if (seen[w]) continue;
          seen[w] = 1;
          best[w] = std::max(best[u], label[w]);
          if (best[w] != space.rank(s, w)) ok = false;
          stack.push_back(w);
        }
      }
    }
    if (ok) {
      json e = json::array();
      for (auto [u, v] : edges) e.push_back({space.point(u), space.point(v)});
      json labels = json::object();
      for (std::size_t i = 0; i < n; ++i) labels[space.point(i)] = to_string(space.spectrum()[label[i]]);
      return yes({{"edges", e}, {"labels", labels}});
    }
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  std::size_t trees = 1;
  for (std::size_t i = 2; i < n; ++i) trees *= n;
  return no({{"trees_checked", trees}});
}

Verdict tsi_oracle(const Space& space) {
  const RootedTree tree = build_representing_tree(space);
  const auto inner = tree.internal_nodes();
  if (inner.size() > kTsiMaxInternalNodes)
    throw Error(Errc::TooLarge, "the relabeling search is limited to " + std::to_string(kTsiMaxInternalNodes) +
                                    " internal nodes, got " + std::to_string(inner.size()));
  const std::vector<Rational> values(space.spectrum().begin() + 1, space.spectrum().end());
  const std::string target = canonical_code(tree, CodeMode::Labeled).code;
  std::vector<std::size_t> slot(tree.node_count(), 0);
  for (std::size_t i = 0; i < inner.size(); ++i) slot[inner[i]] = i;
  std::vector<std::size_t> choice(inner.size(), 0);
  std::vector<std::size_t> uses(values.size(), 0);
  std::optional<Verdict> failure;
  std::size_t labelings = 0;

  // Internal nodes come in preorder, so each parent is assigned before its children.
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (failure) return;
    if (i == inner.size()) {
      if (std::find(uses.begin(), uses.end(), 0) != uses.end()) return;
      ++labelings;
      std::vector<std::string> tokens(tree.node_count(), "0/1");
      for (std::size_t k = 0; k < inner.size(); ++k) tokens[inner[k]] = to_fraction_string(values[choice[k]]);
      if (code_with_tokens(tree, tokens) != target) {
        json labeling = json::object();
        for (std::size_t k = 0; k < inner.size(); ++k)
          labeling[std::to_string(inner[k])] = to_string(values[choice[k]]);
        failure = no({{"relabeling", labeling}});
      }
      return;
    }
    const NodeId v = inner[i];
    const std::size_t cap = tree.parent(v) ? choice[slot[*tree.parent(v)]] : values.size();
    for (std::size_t c = 0; c < cap; ++c) {
      choice[i] = c;
      ++uses[c];
      assign(i + 1);
      --uses[c];
    }
  };
  assign(0);
  if (failure) return *failure;
  return yes({{"labelings", labelings}});
}

}  // namespace ultraforest
