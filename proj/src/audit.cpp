#include "ultraforest/audit.hpp"

#include "ultraforest/canonical.hpp"
#include "ultraforest/classify.hpp"
#include "ultraforest/error.hpp"
#include "ultraforest/gen.hpp"
#include "ultraforest/oracles.hpp"
#include "ultraforest/parallel.hpp"
#include "ultraforest/unrooted.hpp"

#include <algorithm>
#include <functional>

namespace ultraforest {

using nlohmann::json;

namespace {

class Auditor {
 public:
  explicit Auditor(AuditReport& report) : report_(report) {}

  // All verdicts must agree.
  void agree(const std::string& check, std::initializer_list<std::pair<const char*, std::function<bool()>>> sides) {
    json values = json::object();
    std::optional<bool> first;
    bool mismatch = false;
    try {
      for (const auto& [name, fn] : sides) {
        const bool v = fn();
        values[name] = v;
        if (first && *first != v) mismatch = true;
        first = v;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::TooLarge) throw;
      report_.skipped.push_back(check);
      return;
    }
    ++report_.checks_run;
    if (mismatch) report_.discrepancies.push_back({check, values});
  }

  // A single condition that must hold.
  void expect(const std::string& check, bool ok, json detail = json::object()) {
    ++report_.checks_run;
    if (!ok) report_.discrepancies.push_back({check, std::move(detail)});
  }

  void skip(const std::string& check) { report_.skipped.push_back(check); }

 private:
  AuditReport& report_;
};

std::size_t internal_count(const RootedTree& tree) { return tree.internal_nodes().size(); }

}  // namespace

AuditReport audit_equivalences(const Space& space) {
  if (space.size() < 2) throw Error(Errc::SingletonSpace, "the audit needs at least two points");
  AuditReport report;
  Auditor a(report);
  const RootedTree tree = build_representing_tree(space);
  const auto balls = ballean_bruteforce(space);
  const std::size_t x = space.size();
  const std::size_t sp = space.spectrum().size();
  const std::size_t bx = balls.size();
  const std::size_t delta = tree.max_out_degree();
  const bool injective = has_injective_internal_labels(tree).holds;
  const bool binary = is_strictly_binary(tree).holds;

  // Ballean = vertex set of the representing tree.
  {
    auto from_tree = ballean(tree);
    auto brute = balls;
    std::sort(from_tree.begin(), from_tree.end());
    std::sort(brute.begin(), brute.end());
    a.expect("ballean matches tree nodes", from_tree == brute, {{"tree_nodes", from_tree.size()}, {"balls", bx}});
  }

  // Path-max distance along the tree.
  {
    bool ok = true;
    const auto back = tree_to_space(tree, space.points());
    ok = back == space;
    a.expect("tree path maxima reproduce d", ok);
  }

  a.agree("U: |Sp|=|X| <=> complete bipartite levels <=> binary with injective labels",
          {{"spectrum", [&] { return is_class_U(space).holds; }},
           {"graphs", [&] { return all_level_graphs_complete_bipartite(space).holds; }},
           {"tree", [&] { return binary && injective; }}});

  a.agree("D: injective labels <=> multipartite <=> connected <=> distinct diameters <=> ball count",
          {{"tree", [&] { return injective; }},
           {"multipartite", [&] { return all_level_graphs_complete_multipartite(space).holds; }},
           {"connected", [&] { return all_level_graphs_connected(space).holds; }},
           {"diameters", [&] { return nonsingular_ball_diameters_distinct(space).holds; }},
           {"ball_count", [&] { return sp + x == bx + 1; }}});

  a.agree("strictly binary <=> no equilateral triangle",
          {{"tree", [&] { return binary; }}, {"triangles", [&] { return no_equilateral_triangle(space).holds; }}});
  a.agree("strictly binary <=> Hamilton cycles",
          {{"tree", [&] { return binary; }},
           {"hamilton", [&] { return hamilton_oracle_strictly_binary(space).holds; }}});

  for (std::size_t n = 2; n <= std::max<std::size_t>(x, 2); ++n) {
    const std::string tag = "strictly " + std::to_string(n) + "-ary";
    a.agree(tag + ": tree <=> level graphs <=> equidistant split <=> ball formula",
            {{"tree", [&] { return is_strictly_nary(tree, n).holds; }},
             {"level_graphs", [&] { return level_graphs_union_of_nary(space, n, tree).holds; }},
             {"equidistant", [&] { return equidistant_split_oracle(space, n).holds; }},
             {"ball_formula", [&] { return ball_formula_oracle(space, n).holds; }},
             {"ball_formula_tree", [&] { return ball_formula_check(tree, n).holds; }}});
  }

  // Ball-count bounds in terms of the largest out-degree.
  {
    const auto d = static_cast<long long>(delta), X = static_cast<long long>(x), B = static_cast<long long>(bx),
               S = static_cast<long long>(sp);
    const bool nary = is_strictly_nary(tree, delta).holds;
    const long long lhs1 = B * (d - 1), rhs1 = d * X - 1;
    a.expect("ball bound |B|(D-1) >= D|X|-1", lhs1 >= rhs1, {{"lhs", lhs1}, {"rhs", rhs1}});
    a.expect("ball bound equality <=> strictly D-ary", (lhs1 == rhs1) == nary, {{"lhs", lhs1}, {"rhs", rhs1}});
    const long long lhs2 = 2 * B * (d - 1), rhs2 = S * (d - 1) + 2 * d * X - d - X;
    a.expect("ball-spectrum bound", lhs2 >= rhs2, {{"lhs", lhs2}, {"rhs", rhs2}});
    a.expect("ball-spectrum equality <=> strictly D-ary with injective labels", (lhs2 == rhs2) == (nary && injective),
             {{"lhs", lhs2}, {"rhs", rhs2}});
    a.expect("|Sp(X)| <= |X|", sp <= x, {{"spectrum", sp}, {"points", x}});
  }

  for (NodeId v : tree.internal_nodes()) {
    const auto& ch = tree.children(v);
    const bool leafy = std::any_of(ch.begin(), ch.end(), [&](NodeId c) { return tree.is_leaf(c); });
    a.agree("leaf child <=> central point in ball " + std::to_string(v),
            {{"tree", [&] { return leafy; }}, {"ball", [&] { return central_point_oracle(space, tree.leaf_set(v)).holds; }}});
  }

  a.agree("homogeneous: tree <=> isometric balls",
          {{"tree", [&] { return is_homogeneous(tree).holds; }}, {"oracle", [&] { return homogeneous_oracle(space).holds; }}});
  a.agree("leaves on one level <=> equal spectrum sizes",
          {{"tree", [&] { return leaves_same_level(tree).holds; }}, {"oracle", [&] { return spec_size_oracle(space).holds; }}});
  a.agree("labels per level <=> spectra are final segments",
          {{"tree", [&] { return labels_same_level(tree).holds; }}, {"oracle", [&] { return spec_suffix_oracle(space).holds; }}});
  a.agree("labels per level and leaves on one level <=> equal spectra",
          {{"tree", [&] { return labels_same_level(tree).holds && leaves_same_level(tree).holds; }},
           {"oracle", [&] { return spec_equal_oracle(space).holds; }}});
  if (leaves_same_level(tree)) {
    a.agree("leaves on one level: labels per level <=> full-vertex level graphs",
            {{"tree", [&] { return labels_same_level(tree).holds; }},
             {"oracle", [&] { return full_vertex_level_graphs(space).holds; }}});
  } else {
    a.skip("leaves on one level: labels per level <=> full-vertex level graphs (hypothesis fails)");
  }
  if (is_homogeneous(tree)) a.expect("homogeneous => full-vertex level graphs", full_vertex_level_graphs(space).holds);

  {
    const auto perfect = is_perfect_strictly_nary(tree);
    a.agree("perfect strictly n-ary <=> equal-part multipartite pieces",
            {{"tree", [&] { return perfect.has_value(); }}, {"graphs", [&] { return graph_oracle_perfect(space).holds; }}});
    if (perfect) {
      const auto g = graph_oracle_perfect(space);
      a.expect("perfect arity matches graph part count", g.holds && g.certificate.at("n") == *perfect);
    }
    if (injective)
      a.agree("injective labels: perfect <=> level graphs are equal-part multipartite",
              {{"tree", [&] { return perfect.has_value(); }},
               {"graphs", [&] { return graph_oracle_perfect_injective(space).holds; }}});
  }

  {
    const bool leafy = has_leaf_child_everywhere(tree).ok;
    a.agree("leaf child everywhere <=> generated by an unrooted tree",
            {{"tree", [&] { return leafy; }}, {"oracle", [&] { return unrooted_generated_oracle(space).holds; }}});
    if (leafy) {
      const auto u = unrooted_from_representing(tree);
      const bool generated = generates_ultrametric(u).ok;
      a.expect("chain construction generates the space", generated && reorder(space_from_unrooted(u), space.points()) == space);
    }
  }

  {
    const bool r = is_class_R(tree).holds, rt = is_class_R_tilde(tree).holds;
    a.expect("R within R-tilde within D", (!r || rt) && (!rt || injective), {{"R", r}, {"R-tilde", rt}, {"D", injective}});
    a.expect("U implies strictly binary and injective", !is_class_U(space).holds || (binary && injective));
    a.agree("R <=> |Iso| = 2", {{"tree", [&] { return r; }}, {"count", [&] { return count_self_isometries(tree) == 2; }}});
    a.agree("R <=> as rigid as possible",
            {{"tree", [&] { return r; }},
             {"bruteforce", [&] {
                const auto stats = self_isometries_bruteforce(space);
                return stats.count == 2 && stats.min_fixed + 2 == x;
              }}});
    a.expect("|Iso| matches enumeration", [&] {
      try {
        return BigInt(self_isometries_bruteforce(space).count) == count_self_isometries(tree);
      } catch (const Error&) {
        return true;
      }
    }());
    a.expect("R-tilde shape satisfies the TSI shape guarantee", !rt || tsi_shape_guarantee(tree).holds);
  }

  if (internal_count(tree) <= kTsiMaxInternalNodes) {
    const bool oracle = tsi_oracle(space).holds;
    if (tsi_shape_guarantee(tree)) a.expect("TSI shape guarantee => TSI", oracle);
    if (injective)
      a.agree("injective labels: TSI criterion <=> TSI",
              {{"tree", [&] { return tsi_injective(tree).holds; }}, {"oracle", [&] { return oracle; }}});
    if (x <= 4) a.expect("spaces with at most four points are TSI", oracle);
  } else {
    a.skip("TSI relabeling search");
  }
  return report;
}

ExhaustiveAudit audit_exhaustive(std::size_t max_n) {
  ExhaustiveAudit out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    const auto spaces = enumerate_spaces(n);
    std::vector<AuditReport> reports(spaces.size());
    parallel_for(spaces.size(), [&](std::size_t i) { reports[i] = audit_equivalences(spaces[i]); });
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      ++out.spaces;
      out.checks_run += reports[i].checks_run;
      out.skipped += reports[i].skipped.size();
      for (auto& d : reports[i].discrepancies) out.discrepancies.emplace_back(spaces[i], std::move(d));
    }
  }
  return out;
}

json to_json(const AuditReport& report) {
  json d = json::array();
  for (const auto& x : report.discrepancies) d.push_back({{"check", x.check}, {"detail", x.detail}});
  return {{"checks_run", report.checks_run}, {"skipped", report.skipped}, {"discrepancies", d}};
}

}  // namespace ultraforest
