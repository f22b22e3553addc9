#include "fixtures.hpp"
#include "oracles.hpp"

#include "ultraforest/gen.hpp"
#include "ultraforest/graphs.hpp"

#include <doctest.h>

#include <random>

using namespace fixtures;

namespace {

using Edges = std::vector<std::pair<PointId, PointId>>;

Edges edge_names(const SimpleGraph& g) {
  Edges out;
  for (auto [a, b] : g.edges()) out.emplace_back(g.vertices()[a], g.vertices()[b]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("level_graph") {
  CHECK(level_graph(two_points(3), R(3)).edge_count() == 1);

  const SimpleGraph g2 = level_graph(isosceles(), R(2));
  CHECK(g2.vertices() == std::vector<PointId>{"a", "b", "c"});
  CHECK(edge_names(g2) == Edges{{"a", "c"}, {"b", "c"}});

  const SimpleGraph g1 = level_graph(isosceles(), R(1));
  CHECK(edge_names(g1) == Edges{{"a", "b"}});
  CHECK(g1.degree(g1.index_of("c")) == 0);

  CHECK(error_of([] { level_graph(isosceles(), R(5)); }) == Errc::ValueNotInSpectrum);
  CHECK(error_of([] { level_graph(isosceles(), R(0)); }) == Errc::ZeroRadius);
}

TEST_CASE("strip_isolated") {
  const SimpleGraph k2 = level_graph(two_points(), R(1));
  CHECK(strip_isolated(k2) == k2);

  const SimpleGraph s = strip_isolated(level_graph(isosceles(), R(1)));
  CHECK(s.vertices() == std::vector<PointId>{"a", "b"});
  CHECK(s.edge_count() == 1);
  CHECK(strip_isolated(s) == s);

  const SimpleGraph empty({"a", "b", "c"}, {});
  CHECK(error_of([&] { strip_isolated(empty); }) == Errc::AllVerticesIsolated);
}

TEST_CASE("complete_multipartite_parts") {
  const SimpleGraph k23({"a", "b", "c", "d", "e"},
                        {{"a", "c"}, {"a", "d"}, {"a", "e"}, {"b", "c"}, {"b", "d"}, {"b", "e"}});
  const auto parts = complete_multipartite_parts(k23);
  REQUIRE(parts);
  CHECK(*parts == std::vector<PointSet>{{"a", "b"}, {"c", "d", "e"}});

  // a-b-c is K_{1,2}
  const SimpleGraph path3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(complete_multipartite_parts(path3) == std::vector<PointSet>{{"b"}, {"a", "c"}});
  CHECK(testing_oracles::multipartite_bruteforce(path3) == complete_multipartite_parts(path3));
  const SimpleGraph path4({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK_FALSE(complete_multipartite_parts(path4));
  CHECK_FALSE(testing_oracles::multipartite_bruteforce(path4));

  const SimpleGraph k3({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(complete_multipartite_parts(k3) == std::vector<PointSet>{{"a"}, {"b"}, {"c"}});
}

TEST_CASE("invalid graphs are rejected") {
  CHECK(error_of([] { SimpleGraph({"a", "a"}, {}); }) == Errc::InvalidGraph);
  CHECK(error_of([] { SimpleGraph({"a", "b"}, {{"a", "a"}}); }) == Errc::InvalidGraph);
  CHECK(error_of([] { SimpleGraph({"a", "b"}, {{"a", "z"}}); }) == Errc::InvalidGraph);
}

TEST_CASE("decompose_level_graph") {
  const Space iso = isosceles();
  const RootedTree t = build_representing_tree(iso);
  auto top = decompose_level_graph(iso, R(2), t);
  REQUIRE(top.size() == 1);
  CHECK(top[0].node == t.root());
  CHECK(top[0].parts == std::vector<PointSet>{{"c"}, {"a", "b"}});
  auto low = decompose_level_graph(iso, R(1), t);
  REQUIRE(low.size() == 1);
  CHECK(low[0].parts == std::vector<PointSet>{{"a"}, {"b"}});

  const Space fig = figure_space();
  const RootedTree ft = build_representing_tree(fig);
  auto pieces = decompose_level_graph(fig, R(1), ft);
  REQUIRE(pieces.size() == 4);
  std::vector<std::size_t> sizes;
  for (const auto& p : pieces) {
    CHECK(ft.label(p.node) == R(1));
    for (const auto& part : p.parts) CHECK(part.size() == 1);
    sizes.push_back(p.parts.size());
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 2, 2, 3});

  CHECK(error_of([&] { decompose_level_graph(iso, R(7), t); }) == Errc::ValueNotInSpectrum);
}

TEST_CASE("diametrical graph is complete multipartite with the tree's parts") {
  std::vector<Space> spaces;
  for (std::size_t n = 2; n <= 6; ++n)
    for (auto& s : enumerate_spaces(n)) spaces.push_back(s);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) spaces.push_back(random_space(2 + seed % 40, seed));

  for (const Space& s : spaces) {
    const auto parts = complete_multipartite_parts(level_graph(s, diameter(s)));
    REQUIRE(parts);
    CHECK(*parts == multipartite_parts(s));

    const RootedTree t = build_representing_tree(s);
    for (std::size_t k = 1; k < s.spectrum().size(); ++k) {
      const Rational r = s.spectrum()[k];
      const auto pieces = decompose_level_graph(s, r, t);
      std::size_t labeled = 0;
      for (NodeId v : t.internal_nodes()) labeled += t.label(v) == r;
      CHECK(pieces.size() == labeled);
      std::vector<PointId> seen;
      for (const auto& p : pieces) {
        CHECK(p.parts.size() == t.out_degree(p.node));
        for (const auto& part : p.parts) seen.insert(seen.end(), part.begin(), part.end());
      }
      std::sort(seen.begin(), seen.end());
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
  }
}

TEST_CASE("multipartite recognition agrees with trying every partition") {
  std::mt19937 rng(11);
  std::size_t positive = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 2 + trial % 7;
    std::vector<PointId> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<std::pair<PointId, PointId>> edges;
    if (trial % 2 == 0) {
      // planted multipartite graph, then maybe one flipped pair
      std::uniform_int_distribution<std::size_t> block(0, n - 1);
      std::vector<std::size_t> b(n);
      for (auto& x : b) x = block(rng);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (b[i] != b[j]) edges.emplace_back(vs[i], vs[j]);
      if (trial % 4 == 0 && !edges.empty()) edges.erase(edges.begin() + rng() % edges.size());
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (rng() % 2) edges.emplace_back(vs[i], vs[j]);
    }
    const SimpleGraph g(vs, edges);
    const auto fast = complete_multipartite_parts(g);
    CHECK(fast == testing_oracles::multipartite_bruteforce(g));
    positive += fast.has_value();
  }
  CHECK(positive > 100);
}

TEST_CASE("induced subgraphs and components") {
  const SimpleGraph g({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK(connected_components(g) == std::vector<PointSet>{{"a", "b"}, {"c", "d"}});
  const SimpleGraph h = g.induced({"a", "b", "c"});
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 1);
}
