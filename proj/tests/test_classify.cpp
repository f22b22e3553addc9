#include "fixtures.hpp"
#include "oracles.hpp"

#include "ultraforest/audit.hpp"
#include "ultraforest/canonical.hpp"
#include "ultraforest/classify.hpp"
#include "ultraforest/gen.hpp"
#include "ultraforest/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace fixtures;

namespace {

RootedTree T(const Space& s) { return build_representing_tree(s); }

// Same shape, labels pushed through a random strictly increasing map.
Space relabel_increasing(const Space& s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<Rational, Rational> f;
  Rational acc(0);
  for (const auto& v : s.spectrum()) {
    if (v != Rational(0)) acc += Rational(static_cast<std::int64_t>(1 + rng() % 9), static_cast<std::int64_t>(1 + rng() % 7));
    f[v] = acc;
  }
  std::vector<std::vector<Rational>> d(s.size(), std::vector<Rational>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) d[i][j] = f[s.dist(i, j)];
  return validate_space(d, s.points());
}

}  // namespace

TEST_CASE("class names round trip") {
  CHECK(all_classes().size() == 14);
  for (ClassId id : all_classes()) CHECK(parse_class(class_name(id)) == id);
  CHECK(error_of([] { parse_class("no-such-class"); }) == Errc::UnknownClass);
  std::size_t hereditary = 0;
  for (ClassId id : all_classes()) hereditary += is_hereditary_class(id);
  CHECK(hereditary == 7);
}

TEST_CASE("class U") {
  CHECK(is_class_U(two_points()).holds);
  CHECK(is_class_U(isosceles()).holds);
  CHECK_FALSE(is_class_U(equilateral()).holds);
}

TEST_CASE("injective internal labels") {
  CHECK(has_injective_internal_labels(T(isosceles())).holds);
  CHECK_FALSE(has_injective_internal_labels(T(perfect_binary4())).holds);
  CHECK(has_injective_internal_labels(T(singleton())).holds);
}

TEST_CASE("strictly binary and its space-side tests") {
  CHECK(is_strictly_binary(T(isosceles())).holds);
  CHECK(no_equilateral_triangle(isosceles()).holds);
  CHECK_FALSE(is_strictly_binary(T(equilateral())).holds);
  CHECK_FALSE(no_equilateral_triangle(equilateral()).holds);
  CHECK(is_strictly_binary(T(two_points())).holds);

  CHECK_FALSE(hamilton_oracle_strictly_binary(equilateral()).holds);
  CHECK(hamilton_oracle_strictly_binary(isosceles()).holds);
  CHECK(hamilton_oracle_strictly_binary(two_points()).holds);
  CHECK(error_of([] { hamilton_oracle_strictly_binary(perfect_binary8()); }) == Errc::TooLarge);
}

TEST_CASE("strictly n-ary and the ball formula") {
  CHECK(is_strictly_nary(T(equilateral()), 3).holds);
  CHECK(ball_formula_check(T(equilateral()), 3).holds);
  CHECK_FALSE(is_strictly_nary(T(isosceles()), 3).holds);
  CHECK(is_strictly_nary(T(perfect_ternary27()), 3).holds);
  CHECK(ball_formula_check(T(perfect_ternary27()), 3).holds);
  CHECK(strict_arity(T(isosceles())) == 2);
  CHECK_FALSE(strict_arity(T(t5())));
}

TEST_CASE("equidistant_partition") {
  const auto whole = equidistant_partition(isosceles(), {"a", "b", "c"});
  REQUIRE(whole);
  CHECK(whole->balls == std::vector<PointSet>{{"c"}, {"a", "b"}});
  CHECK(whole->distance == R(2));
  const auto inner = equidistant_partition(isosceles(), {"a", "b"});
  REQUIRE(inner);
  CHECK(inner->balls == std::vector<PointSet>{{"a"}, {"b"}});
  CHECK(inner->distance == R(1));
  CHECK(error_of([] { equidistant_partition(isosceles(), {"a"}); }) == Errc::SingularBall);
  CHECK(error_of([] { equidistant_partition(isosceles(), {"a", "c"}); }) == Errc::NotABall);
}

TEST_CASE("perfect strictly n-ary") {
  CHECK(is_perfect_strictly_nary(T(perfect_ternary27())) == 3);
  CHECK(graph_oracle_perfect(perfect_ternary27()).holds);
  CHECK(is_perfect_strictly_nary(T(perfect_binary4())) == 2);
  CHECK(graph_oracle_perfect(perfect_binary4()).holds);
  CHECK_FALSE(is_perfect_strictly_nary(T(isosceles())));
  CHECK_FALSE(graph_oracle_perfect(isosceles()).holds);
}

TEST_CASE("rigid classes") {
  CHECK(is_class_R(T(isosceles())).holds);
  CHECK(count_self_isometries(T(isosceles())) == 2);
  CHECK_FALSE(is_class_R(T(perfect_binary4())).holds);
  CHECK(testing_oracles::self_isometry_count_bruteforce(perfect_binary4()) == 8);
  CHECK_FALSE(is_class_R(T(equilateral())).holds);
  CHECK(is_class_R_tilde(T(equilateral())).holds);
}

TEST_CASE("conditions (A) and (B)") {
  CHECK(is_class_T(T(isosceles())).holds);
  CHECK(is_class_T(T(t6())).holds);
  CHECK_FALSE(is_class_T(T(t5())).holds);
}

TEST_CASE("determined by shape and spectrum") {
  CHECK(tsi_injective(T(t6())).holds);
  CHECK(tsi_oracle(t6()).holds);
  CHECK_FALSE(tsi_injective(T(t5())).holds);
  CHECK_FALSE(tsi_oracle(t5()).holds);
  for (std::size_t n = 2; n <= 4; ++n)
    for (const Space& s : enumerate_spaces(n)) CHECK(tsi_oracle(s).holds);
  CHECK(tsi_shape_guarantee(T(isosceles())).holds);
  CHECK(in_class(t6(), ClassId::TSI));
  CHECK_FALSE(in_class(t5(), ClassId::TSI));
}

TEST_CASE("homogeneous") {
  CHECK(is_homogeneous(T(equilateral())).holds);
  CHECK(homogeneous_oracle(equilateral()).holds);
  CHECK(is_homogeneous(T(perfect_binary4())).holds);
  CHECK(homogeneous_oracle(perfect_binary4()).holds);
  CHECK_FALSE(is_homogeneous(T(isosceles())).holds);
  CHECK_FALSE(homogeneous_oracle(isosceles()).holds);
  CHECK(is_homogeneous(T(homogeneous_423())).holds);
}

TEST_CASE("level conditions and point spectra") {
  CHECK(leaves_same_level(T(perfect_binary4())).holds);
  CHECK(spec_size_oracle(perfect_binary4()).holds);
  const Space pb = perfect_binary4();
  for (const auto& p : pb.points()) CHECK(point_spectrum(pb, p).values.size() == 3);
  CHECK_FALSE(leaves_same_level(T(isosceles())).holds);
  CHECK_FALSE(spec_size_oracle(isosceles()).holds);
  CHECK(labels_same_level(T(perfect_binary4())).holds);
  CHECK(full_vertex_level_graphs(perfect_binary4()).holds);
  CHECK(strip_isolated(level_graph(perfect_binary4(), R(1))).vertex_count() == 4);
  CHECK(spec_equal_oracle(perfect_binary4()).holds);
  CHECK(spec_suffix_oracle(isosceles()).holds);
}

TEST_CASE("ball-preserving structure") {
  CHECK(is_ball_preserving_class(T(isosceles())).holds);
  CHECK(is_ball_preserving_class(T(perfect_binary4())).holds);
  CHECK_FALSE(is_ball_preserving_class(T(perfect_binary8())).holds);
}

TEST_CASE("generated by an unrooted tree") {
  CHECK(is_unrooted_generated(T(figure_space())).holds);
  CHECK(is_unrooted_generated(T(unrooted5())).holds);
  CHECK_FALSE(is_unrooted_generated(T(perfect_binary4())).holds);
  CHECK_FALSE(unrooted_generated_oracle(perfect_binary4()).holds);
  CHECK(unrooted_generated_oracle(unrooted5()).holds);
}

TEST_CASE("classify report") {
  const ClassReport r = classify(isosceles());
  CHECK(r.points == 3);
  CHECK(r.balls == 5);
  CHECK(r.height == 2);
  CHECK(r.max_out_degree == 2);
  CHECK(r.self_isometries == "2");
  CHECK(r.entries.size() == 14);
  for (const auto& e : r.entries) {
    REQUIRE(e.holds);
    CHECK(*e.holds == in_class(isosceles(), e.id));
  }
  const auto j = to_json(r);
  CHECK(j["points"] == 3);
  CHECK(to_text(r).find("U: yes") != std::string::npos);
  CHECK(error_of([] { in_class(singleton(), ClassId::U); }) == Errc::SingletonSpace);
}

TEST_CASE("audit finds no discrepancies") {
  CHECK(audit_equivalences(isosceles()).discrepancies.empty());
  CHECK(audit_equivalences(equilateral()).discrepancies.empty());
  CHECK(audit_equivalences(figure_space()).discrepancies.empty());
  for (std::size_t n = 2; n <= 5; ++n)
    for (const Space& s : enumerate_spaces(n)) {
      const auto report = audit_equivalences(s);
      CHECK(report.checks_run > 0);
      CHECK(report.discrepancies.empty());
    }
}

TEST_CASE("class verdicts depend only on shape and label order") {
  std::uint64_t seed = 100;
  for (std::size_t n = 2; n <= 6; ++n)
    for (const Space& s : enumerate_spaces(n)) {
      const Space t = relabel_increasing(s, ++seed);
      REQUIRE(are_weakly_similar(s, t));
      const auto a = classify(s);
      const auto b = classify(t);
      for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(a.entries[i].holds == b.entries[i].holds);
    }
}

TEST_CASE("structural predicates agree with their space-side oracles on random spaces") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Space s = random_space(2 + seed % 6, seed);
    const RootedTree t = T(s);
    CHECK(is_strictly_binary(t).holds == no_equilateral_triangle(s).holds);
    CHECK(is_homogeneous(t).holds == homogeneous_oracle(s).holds);
    CHECK(is_unrooted_generated(t).holds == unrooted_generated_oracle(s).holds);
    CHECK(has_injective_internal_labels(t).holds == nonsingular_ball_diameters_distinct(s).holds);
    CHECK(is_class_U(s).holds == all_level_graphs_complete_bipartite(s).holds);
  }
}
