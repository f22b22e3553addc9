#include "ultraforest/classify.hpp"

#include "ultraforest/canonical.hpp"
#include "ultraforest/error.hpp"
#include "ultraforest/oracles.hpp"
#include "ultraforest/unrooted.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace ultraforest {

using nlohmann::json;

namespace {

constexpr std::array kAllClasses{
    ClassId::U,          ClassId::D,          ClassId::StrictlyBinary,  ClassId::R,
    ClassId::RTilde,     ClassId::BallPreserving, ClassId::LabelsSameLevel, ClassId::StrictlyNary,
    ClassId::T,          ClassId::TSI,        ClassId::Homogeneous,     ClassId::LeavesSameLevel,
    ClassId::PerfectNary, ClassId::UnrootedGenerated,
};

Verdict yes(json cert = json::object()) { return Verdict{true, std::move(cert)}; }
Verdict no(json cert) { return Verdict{false, std::move(cert)}; }

// Internal nodes grouped by level.
std::vector<std::vector<NodeId>> internal_by_level(const RootedTree& tree) {
  std::vector<std::vector<NodeId>> levels(tree.height() + 1);
  for (NodeId v : tree.internal_nodes()) levels[tree.level(v)].push_back(v);
  return levels;
}

std::vector<std::size_t> internal_counts(const RootedTree& tree) {
  std::vector<std::size_t> out;
  for (const auto& lvl : internal_by_level(tree)) out.push_back(lvl.size());
  return out;
}

json node_json(const RootedTree& tree, NodeId v) {
  json j{{"node", v}, {"label", to_string(tree.label(v))}, {"level", tree.level(v)}, {"out_degree", tree.out_degree(v)}};
  j["ball"] = tree.leaf_set(v);
  return j;
}

}  // namespace

std::span<const ClassId> all_classes() { return kAllClasses; }

std::string_view class_name(ClassId id) {
  switch (id) {
    case ClassId::U: return "U";
    case ClassId::D: return "D";
    case ClassId::StrictlyBinary: return "strictly-binary";
    case ClassId::R: return "R";
    case ClassId::RTilde: return "R-tilde";
    case ClassId::BallPreserving: return "ball-preserving";
    case ClassId::LabelsSameLevel: return "labels-same-level";
    case ClassId::StrictlyNary: return "strictly-nary";
    case ClassId::T: return "T";
    case ClassId::TSI: return "TSI";
    case ClassId::Homogeneous: return "homogeneous";
    case ClassId::LeavesSameLevel: return "leaves-same-level";
    case ClassId::PerfectNary: return "perfect-nary";
    case ClassId::UnrootedGenerated: return "unrooted-generated";
  }
  return "?";
}

ClassId parse_class(std::string_view name) {
  for (ClassId id : kAllClasses)
    if (class_name(id) == name) return id;
  std::string known;
  for (ClassId id : kAllClasses) known += (known.empty() ? "" : ", ") + std::string(class_name(id));
  throw Error(Errc::UnknownClass, "unknown class '" + std::string(name) + "' (known: " + known + ")",
              {std::string(name)});
}

bool is_hereditary_class(ClassId id) {
  switch (id) {
    case ClassId::U:
    case ClassId::D:
    case ClassId::StrictlyBinary:
    case ClassId::R:
    case ClassId::RTilde:
    case ClassId::BallPreserving:
    case ClassId::LabelsSameLevel:
      return true;
    default:
      return false;
  }
}

Verdict is_class_U(const Space& space) {
  if (space.size() < 2) throw Error(Errc::SingletonSpace, "class U is defined for |X| >= 2");
  json cert{{"spectrum_size", space.spectrum().size()}, {"points", space.size()}};
  return Verdict{space.spectrum().size() == space.size(), cert};
}

Verdict has_injective_internal_labels(const RootedTree& tree) {
  std::map<Rational, NodeId> first;
  for (NodeId v : tree.internal_nodes()) {
    auto [it, inserted] = first.emplace(tree.label(v), v);
    if (!inserted)
      return no({{"repeated_label", to_string(tree.label(v))}, {"nodes", {node_json(tree, it->second), node_json(tree, v)}}});
  }
  json labels = json::array();
  for (const auto& [label, v] : first) labels.push_back(to_string(label));
  return yes({{"labels", labels}});
}

Verdict is_strictly_nary(const RootedTree& tree, std::size_t n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "arity must be at least 2");
  for (NodeId v : tree.internal_nodes())
    if (tree.out_degree(v) != n) return no({{"n", n}, {"node", node_json(tree, v)}});
  return yes({{"n", n}});
}

Verdict is_strictly_binary(const RootedTree& tree) { return is_strictly_nary(tree, 2); }

std::optional<std::size_t> strict_arity(const RootedTree& tree) {
  std::optional<std::size_t> n;
  for (NodeId v : tree.internal_nodes()) {
    if (n && *n != tree.out_degree(v)) return std::nullopt;
    n = tree.out_degree(v);
  }
  return n;
}

Verdict ball_formula_check(const RootedTree& tree, std::size_t n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "arity must be at least 2");
  std::vector<std::size_t> subtree(tree.node_count(), 1);
  for (NodeId v = tree.node_count(); v-- > 0;)
    for (NodeId c : tree.children(v)) subtree[v] += subtree[c];
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    const std::size_t lhs = (n - 1) * subtree[v] + 1;
    const std::size_t rhs = n * tree.leaf_set(v).size();
    if (lhs != rhs)
      return no({{"n", n}, {"ball", tree.leaf_set(v)}, {"balls_in_ball", subtree[v]}, {"lhs", lhs}, {"rhs", rhs}});
  }
  return yes({{"n", n}});
}

std::optional<std::size_t> is_perfect_strictly_nary(const RootedTree& tree) {
  auto n = strict_arity(tree);
  if (!n) return std::nullopt;
  for (NodeId v : tree.leaves())
    if (tree.level(v) != tree.height()) return std::nullopt;
  return n;
}

Verdict is_class_R_tilde(const RootedTree& tree) {
  auto counts = internal_counts(tree);
  // Levels 0..h-1 each hold exactly one internal node; level h holds leaves only.
  for (std::size_t k = 0; k + 1 < counts.size(); ++k)
    if (counts[k] != 1) return no({{"internal_per_level", counts}, {"level", k}});
  return yes({{"internal_per_level", counts}});
}

Verdict is_class_R(const RootedTree& tree) {
  auto chain = is_class_R_tilde(tree);
  if (!chain) return chain;
  auto binary = is_strictly_binary(tree);
  if (!binary) return binary;
  return yes(chain.certificate);
}

Verdict is_class_T(const RootedTree& tree) {
  auto levels = internal_by_level(tree);
  const std::size_t h = tree.height();
  for (std::size_t k = 0; k + 1 < h; ++k)
    if (levels[k].size() != 1) return no({{"condition", "A"}, {"level", k}, {"internal_nodes", levels[k].size()}});
  if (h >= 1) {
    const auto& last = levels[h - 1];
    for (NodeId v : last)
      if (tree.out_degree(v) != tree.out_degree(last.front()))
        return no({{"condition", "B"}, {"nodes", {node_json(tree, last.front()), node_json(tree, v)}}});
  }
  return yes({{"internal_per_level", internal_counts(tree)}});
}

Verdict tsi_shape_guarantee(const RootedTree& tree) {
  auto levels = internal_by_level(tree);
  const std::size_t h = tree.height();
  for (std::size_t k = 1; k + 2 <= h; ++k)
    if (levels[k].size() != 1) return no({{"level", k}, {"internal_nodes", levels[k].size()}});
  if (h >= 1) {
    const auto& last = levels[h - 1];
    if (last.size() > 2) return no({{"level", h - 1}, {"internal_nodes", last.size()}});
    if (last.size() == 2 && tree.out_degree(last[0]) != tree.out_degree(last[1]))
      return no({{"nodes", {node_json(tree, last[0]), node_json(tree, last[1])}}});
  }
  return yes({{"internal_per_level", internal_counts(tree)}});
}

Verdict tsi_injective(const RootedTree& tree) {
  auto levels = internal_by_level(tree);
  const std::size_t h = tree.height();
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k].size() < 2) continue;
    if (k + 1 != h) return no({{"level", k}, {"internal_nodes", levels[k].size()}});
    for (NodeId v : levels[k])
      if (tree.out_degree(v) != tree.out_degree(levels[k].front()))
        return no({{"nodes", {node_json(tree, levels[k].front()), node_json(tree, v)}}});
  }
  return yes({{"internal_per_level", internal_counts(tree)}});
}

Verdict is_homogeneous(const RootedTree& tree) {
  std::vector<std::optional<NodeId>> first(tree.height() + 1);
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    auto& f = first[tree.level(v)];
    if (!f) {
      f = v;
      continue;
    }
    if (tree.label(v) != tree.label(*f))
      return no({{"condition", "equal labels per level"}, {"nodes", {node_json(tree, *f), node_json(tree, v)}}});
    if (tree.out_degree(v) != tree.out_degree(*f))
      return no({{"condition", "equal out-degrees per level"}, {"nodes", {node_json(tree, *f), node_json(tree, v)}}});
  }
  return yes();
}

Verdict leaves_same_level(const RootedTree& tree) {
  for (NodeId v : tree.leaves())
    if (tree.level(v) != tree.height())
      return no({{"leaf", tree.point(v)}, {"level", tree.level(v)}, {"height", tree.height()}});
  return yes({{"level", tree.height()}});
}

Verdict labels_same_level(const RootedTree& tree) {
  for (const auto& lvl : internal_by_level(tree))
    for (NodeId v : lvl)
      if (tree.label(v) != tree.label(lvl.front()))
        return no({{"nodes", {node_json(tree, lvl.front()), node_json(tree, v)}}});
  return yes();
}

Verdict is_ball_preserving_class(const RootedTree& tree) {
  auto binary = is_strictly_binary(tree);
  if (!binary) return binary;
  auto leafy = has_leaf_child_everywhere(tree);
  if (leafy.ok) return yes({{"condition", "i1"}});
  std::vector<NodeId> both_internal;
  for (NodeId v : tree.internal_nodes()) {
    const auto& ch = tree.children(v);
    if (std::all_of(ch.begin(), ch.end(), [&](NodeId c) { return tree.is_internal(c); })) both_internal.push_back(v);
  }
  if (both_internal.size() == 1 && both_internal.front() == tree.root()) return yes({{"condition", "i2"}});
  return no({{"nodes_with_two_internal_children", both_internal}});
}

Verdict is_unrooted_generated(const RootedTree& tree) {
  auto check = has_leaf_child_everywhere(tree);
  if (check.ok) return yes();
  return no({{"node", node_json(tree, *check.offending_node)}});
}

std::optional<EquidistantPartition> equidistant_partition(const Space& space, const PointSet& ball) {
  const RootedTree tree = build_representing_tree(space);
  const PointSet wanted = make_point_set(ball);
  std::optional<NodeId> at;
  for (NodeId v = 0; v < tree.node_count(); ++v)
    if (tree.leaf_set(v) == wanted) at = v;
  if (!at) throw Error(Errc::NotABall, "the given set is not a ball of the space");
  if (tree.is_leaf(*at)) throw Error(Errc::SingularBall, "a one-point ball has no equidistant partition", wanted);

  EquidistantPartition out;
  for (NodeId c : tree.children(*at)) out.balls.push_back(tree.leaf_set(c));
  std::size_t covered = 0;
  std::optional<Rational> r;
  for (std::size_t a = 0; a < out.balls.size(); ++a) {
    covered += out.balls[a].size();
    for (std::size_t b = a + 1; b < out.balls.size(); ++b)
      for (const auto& x : out.balls[a])
        for (const auto& y : out.balls[b]) {
          const Rational& dxy = space.dist(x, y);
          if (!r) r = dxy;
          if (*r != dxy || dxy <= Rational(0)) return std::nullopt;
        }
  }
  PointSet all;
  for (const auto& b : out.balls) all.insert(all.end(), b.begin(), b.end());
  if (covered != wanted.size() || make_point_set(all) != wanted || !r) return std::nullopt;
  out.distance = *r;
  return out;
}

bool in_class(const Space& space, const RootedTree& tree, ClassId id) {
  if (space.size() < 2) throw Error(Errc::SingletonSpace, "class membership is defined for |X| >= 2");
  switch (id) {
    case ClassId::U: return is_class_U(space).holds;
    case ClassId::D: return has_injective_internal_labels(tree).holds;
    case ClassId::StrictlyBinary: return is_strictly_binary(tree).holds;
    case ClassId::R: return is_class_R(tree).holds;
    case ClassId::RTilde: return is_class_R_tilde(tree).holds;
    case ClassId::BallPreserving: return is_ball_preserving_class(tree).holds;
    case ClassId::LabelsSameLevel: return labels_same_level(tree).holds;
    case ClassId::StrictlyNary: {
      auto n = strict_arity(tree);
      return n && *n >= 3;
    }
    case ClassId::T: return is_class_T(tree).holds;
    case ClassId::TSI:
      if (has_injective_internal_labels(tree)) return tsi_injective(tree).holds;
      if (tsi_shape_guarantee(tree)) return true;
      return tsi_oracle(space).holds;
    case ClassId::Homogeneous: return is_homogeneous(tree).holds;
    case ClassId::LeavesSameLevel: return leaves_same_level(tree).holds;
    case ClassId::PerfectNary: return is_perfect_strictly_nary(tree).has_value();
    case ClassId::UnrootedGenerated: return has_leaf_child_everywhere(tree).ok;
  }
  return false;
}

bool in_class(const Space& space, ClassId id) { return in_class(space, build_representing_tree(space), id); }

namespace {

ClassEntry entry(ClassId id, const Verdict& v) { return ClassEntry{id, v.holds, v.certificate}; }

}  // namespace

ClassReport classify(const Space& space) {
  if (space.size() < 2) throw Error(Errc::SingletonSpace, "classification needs at least two points");
  const RootedTree tree = build_representing_tree(space);
  ClassReport r;
  r.points = space.size();
  r.spectrum = space.spectrum();
  r.balls = tree.node_count();
  r.height = tree.height();
  r.max_out_degree = tree.max_out_degree();
  const BigInt iso = count_self_isometries(tree);
  r.self_isometries = iso.str();

  r.entries.push_back(entry(ClassId::U, is_class_U(space)));
  r.entries.push_back(entry(ClassId::D, has_injective_internal_labels(tree)));
  r.entries.push_back(entry(ClassId::StrictlyBinary, is_strictly_binary(tree)));
  {
    auto v = is_class_R(tree);
    v.certificate["self_isometries"] = r.self_isometries;
    r.entries.push_back(entry(ClassId::R, v));
  }
  r.entries.push_back(entry(ClassId::RTilde, is_class_R_tilde(tree)));
  r.entries.push_back(entry(ClassId::BallPreserving, is_ball_preserving_class(tree)));
  r.entries.push_back(entry(ClassId::LabelsSameLevel, labels_same_level(tree)));
  {
    auto n = strict_arity(tree);
    json cert = n ? json{{"n", *n}} : json{{"n", nullptr}};
    r.entries.push_back(ClassEntry{ClassId::StrictlyNary, n && *n >= 3, cert});
  }
  r.entries.push_back(entry(ClassId::T, is_class_T(tree)));
  {
    ClassEntry e{ClassId::TSI, std::nullopt, json::object()};
    if (has_injective_internal_labels(tree)) {
      auto v = tsi_injective(tree);
      e.holds = v.holds;
      e.certificate = {{"by", "injective-label criterion"}, {"detail", v.certificate}};
    } else if (auto g = tsi_shape_guarantee(tree)) {
      e.holds = true;
      e.certificate = {{"by", "shape guarantee"}, {"detail", g.certificate}};
    } else {
      try {
        auto v = tsi_oracle(space);
        e.holds = v.holds;
        e.certificate = {{"by", "relabeling search"}, {"detail", v.certificate}};
      } catch (const Error& err) {
        if (err.code() != Errc::TooLarge) throw;
        e.certificate = {{"by", "undetermined"}, {"detail", err.what()}};
      }
    }
    r.entries.push_back(e);
  }
  r.entries.push_back(entry(ClassId::Homogeneous, is_homogeneous(tree)));
  r.entries.push_back(entry(ClassId::LeavesSameLevel, leaves_same_level(tree)));
  {
    auto n = is_perfect_strictly_nary(tree);
    json cert = n ? json{{"n", *n}} : json{{"n", nullptr}};
    r.entries.push_back(ClassEntry{ClassId::PerfectNary, n.has_value(), cert});
  }
  r.entries.push_back(entry(ClassId::UnrootedGenerated, is_unrooted_generated(tree)));
  return r;
}

json to_json(const ClassReport& report) {
  json spec = json::array();
  for (const auto& s : report.spectrum) spec.push_back(to_string(s));
  json classes = json::array();
  for (const auto& e : report.entries) {
    json verdict = e.holds ? json(*e.holds) : json(nullptr);
    classes.push_back({{"class", class_name(e.id)}, {"member", verdict}, {"certificate", e.certificate}});
  }
  return {{"points", report.points},          {"spectrum", spec},
          {"balls", report.balls},            {"height", report.height},
          {"max_out_degree", report.max_out_degree}, {"self_isometries", report.self_isometries},
          {"classes", classes}};
}

std::string to_text(const ClassReport& report) {
  std::ostringstream os;
  os << "points " << report.points << ", spectrum {";
  for (std::size_t i = 0; i < report.spectrum.size(); ++i) os << (i ? "," : "") << to_string(report.spectrum[i]);
  os << "}, balls " << report.balls << ", height " << report.height << ", max out-degree " << report.max_out_degree
     << ", |Iso| " << report.self_isometries << '\n';
  for (const auto& e : report.entries) {
    os << class_name(e.id) << ": " << (e.holds ? (*e.holds ? "yes" : "no") : "undetermined");
    if (!e.certificate.empty()) os << "  " << e.certificate.dump();
    os << '\n';
  }
  return os.str();
}

}  // namespace ultraforest
