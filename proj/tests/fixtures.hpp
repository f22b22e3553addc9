#pragma once

#include "ultraforest/error.hpp"
#include "ultraforest/space.hpp"
#include "ultraforest/tree.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fixtures {

using namespace ultraforest;

inline Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

inline Space from_spec(const TreeSpec& spec) { return tree_to_space(RootedTree(spec)); }

inline std::vector<TreeSpec> leaves(std::initializer_list<const char*> ids) {
  std::vector<TreeSpec> out;
  for (const char* id : ids) out.push_back(leaf(id));
  return out;
}

/// d(a,b)=1, d(a,c)=d(b,c)=2
inline Space isosceles(std::int64_t short_side = 1, std::int64_t long_side = 2) {
  return validate_space({{R(0), R(short_side), R(long_side)},
                         {R(short_side), R(0), R(long_side)},
                         {R(long_side), R(long_side), R(0)}},
                        {"a", "b", "c"});
}

inline Space equilateral(std::int64_t side = 1) {
  return validate_space({{R(0), R(side), R(side)}, {R(side), R(0), R(side)}, {R(side), R(side), R(0)}},
                        {"a", "b", "c"});
}

inline Space two_points(std::int64_t d = 1) { return validate_space({{R(0), R(d)}, {R(d), R(0)}}, {"a", "b"}); }

inline Space singleton() { return validate_space({{R(0)}}, {"x"}); }

/// The 16-point tree: r(4) over s1(3), x1, x2, s2(2); s1 over t11, x3, t12,
/// x4, t13; s2 over x5, t21, x6, x7; the t nodes are labeled 1.
inline TreeSpec figure_spec() {
  TreeSpec s1 = node(R(3), {node(R(1), leaves({"x8", "x9"})), leaf("x3"), node(R(1), leaves({"x10", "x11"})),
                            leaf("x4"), node(R(1), leaves({"x12", "x13"}))});
  TreeSpec s2 = node(R(2), {leaf("x5"), node(R(1), leaves({"x14", "x15", "x16"})), leaf("x6"), leaf("x7")});
  return node(R(4), {s1, leaf("x1"), leaf("x2"), s2});
}

inline Space figure_space() { return from_spec(figure_spec()); }

/// Root 2 over two cherries labeled 1.
inline TreeSpec perfect_binary4_spec() {
  return node(R(2), {node(R(1), leaves({"a", "b"})), node(R(1), leaves({"c", "d"}))});
}

inline Space perfect_binary4() { return from_spec(perfect_binary4_spec()); }

inline Space perfect_binary8() {
  return from_spec(node(R(3), {node(R(2), {node(R(1), leaves({"p1", "p2"})), node(R(1), leaves({"p3", "p4"}))}),
                               node(R(2), {node(R(1), leaves({"p5", "p6"})), node(R(1), leaves({"p7", "p8"}))})}));
}

/// Uniform tree: fanout[i] children at level i, labels depth..1 top down.
inline TreeSpec uniform_spec(const std::vector<int>& fanout, std::size_t level, int& next_point) {
  if (level == fanout.size()) return leaf("p" + std::to_string(next_point++));
  std::vector<TreeSpec> kids;
  for (int i = 0; i < fanout[level]; ++i) kids.push_back(uniform_spec(fanout, level + 1, next_point));
  return node(R(static_cast<std::int64_t>(fanout.size() - level)), kids);
}

inline Space uniform_space(const std::vector<int>& fanout) {
  int next = 1;
  return from_spec(uniform_spec(fanout, 0, next));
}

/// 27 points, every internal node with three children.
inline Space perfect_ternary27() { return uniform_space({3, 3, 3}); }

/// 24 points: 4 children at the root, 2 below, 3 below that; labels 3,2,1.
inline Space homogeneous_423() { return uniform_space({4, 2, 3}); }

/// root(3) over u(2) with 3 leaves and v(1) with 3 leaves.
inline Space t6() {
  return from_spec(node(R(3), {node(R(2), leaves({"u1", "u2", "u3"})), node(R(1), leaves({"v1", "v2", "v3"}))}));
}

/// root(3) over u(2) with 3 leaves and v(1) with 2 leaves.
inline Space t5() {
  return from_spec(node(R(3), {node(R(2), leaves({"u1", "u2", "u3"})), node(R(1), leaves({"v1", "v2"}))}));
}

/// root(2) over a leaf x and two cherries labeled 1.
inline Space unrooted5() {
  return from_spec(node(R(2), {leaf("x"), node(R(1), leaves({"u1", "u2"})), node(R(1), leaves({"w1", "w2"}))}));
}

/// Labels stay on one level per value, yet deleting x3 moves the node
/// labeled 1 up beside a node labeled 2.
inline Space labels_level_shift5() {
  return from_spec(node(R(3), {node(R(2), leaves({"x1", "x2"})),
                               node(R(2), {leaf("x3"), node(R(1), leaves({"x4", "x5"}))})}));
}

inline std::optional<Errc> error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::vector<std::string> witness_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.witness();
  }
  return {};
}

}  // namespace fixtures
