// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "fixtures.hpp"
#include "oracles.hpp"

#include "ultraforest/audit.hpp"
#include "ultraforest/canonical.hpp"
#include "ultraforest/classify.hpp"
#include "ultraforest/gen.hpp"
#include "ultraforest/hereditary.hpp"
#include "ultraforest/io.hpp"
#include "ultraforest/oracles.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace fixtures;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void fail(Result& r, const std::string& why) {
  if (r.pass || r.detail.size() < 2000) r.detail += (r.detail.empty() ? "" : "; ") + why;
  r.pass = false;
}

int run_cli(const std::string& args, std::string* out = nullptr) {
  const std::string cmd = std::string(ULTRAFOREST_CLI) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return -1;
  char buf[4096];
  std::size_t got;
  std::string text;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) text.append(buf, got);
  const int status = pclose(p);
  if (out) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ultraforest_acceptance_" + name)).string();
}

std::vector<Space> enumerated(std::size_t from, std::size_t to) {
  std::vector<Space> out;
  for (std::size_t n = from; n <= to; ++n)
    for (auto& s : enumerate_spaces(n)) out.push_back(std::move(s));
  return out;
}

Space scramble(const Space& s, std::mt19937_64& rng) {
  std::vector<PointId> names;
  for (std::size_t i = 0; i < s.size(); ++i) names.push_back("q" + std::to_string(i));
  std::shuffle(names.begin(), names.end(), rng);
  Space renamed = validate_space(distance_matrix(s), names);
  std::vector<PointId> order = names;
  std::shuffle(order.begin(), order.end(), rng);
  return reorder(renamed, order);
}

Space relabel_increasing(const Space& s, std::mt19937_64& rng) {
  std::map<Rational, Rational> f;
  Rational acc(0);
  for (const auto& v : s.spectrum()) {
    if (v != Rational(0))
      acc += Rational(static_cast<std::int64_t>(1 + rng() % 9), static_cast<std::int64_t>(1 + rng() % 5));
    f[v] = acc;
  }
  auto d = distance_matrix(s);
  for (auto& row : d)
    for (auto& x : row) x = f[x];
  return validate_space(d, s.points());
}

// 1. The 16-point example through the command-line tool.
Result figure_round_trip() {
  Result r;
  const auto t0 = Clock::now();
  const std::string matrix = tmp("fig.csv");
  const std::string unrooted = tmp("fig_unrooted.json");
  const std::string back = tmp("fig_back.csv");
  const Space fig = document_space(load_document(std::string(ULTRAFOREST_TEST_DATA) + "/fig_tree.json"));
  std::ofstream(matrix, std::ios::binary) << write_space_csv(fig);

  std::string out;
  if (run_cli("tree --format json " + matrix, &out) != 0) fail(r, "tree command failed");
  else {
    const RootedTree got(tree_from_json(json::parse(out)));
    const RootedTree expected(figure_spec());
    if (canonical_code(got, CodeMode::Unlabeled) != canonical_code(expected, CodeMode::Unlabeled))
      fail(r, "tree shape differs");
    if (!(got == expected)) fail(r, "labeled tree differs");
  }

  if (run_cli("convert --from matrix --to unrooted " + matrix + " --out " + unrooted) != 0)
    fail(r, "convert to unrooted failed");
  else {
    const UnrootedTree u = unrooted_from_json(json::parse(read_text(unrooted)));
    const std::vector<std::pair<PointId, PointId>> expected{
        {"x1", "x2"},   {"x2", "x3"},  {"x2", "x5"},  {"x3", "x4"},   {"x4", "x8"},
        {"x4", "x10"},  {"x4", "x12"}, {"x5", "x6"},  {"x6", "x7"},   {"x7", "x14"},
        {"x8", "x9"},   {"x10", "x11"}, {"x12", "x13"}, {"x14", "x15"}, {"x15", "x16"}};
    if (u.edge_ids() != expected) fail(r, "unrooted edges differ");
  }

  if (run_cli("convert --from unrooted --to csv " + unrooted + " --out " + back) != 0)
    fail(r, "convert back failed");
  else if (read_text(back) != read_text(matrix))
    fail(r, "matrix after the round trip is not bit-identical");

  const double secs = seconds_since(t0);
  if (secs >= 1.0) fail(r, "took " + std::to_string(secs) + " s");
  for (const auto& f : {matrix, unrooted, back}) std::filesystem::remove(f);
  if (r.pass) r.detail = "16 points, 15 edges, bit-identical matrix, " + std::to_string(secs) + " s";
  return r;
}

// 2. Every characterization audited on every space with 2..6 points.
Result exhaustive_audit() {
  Result r;
  const auto t0 = Clock::now();
  const ExhaustiveAudit a = audit_exhaustive(6);
  const double secs = seconds_since(t0);
  if (a.spaces != 119) fail(r, std::to_string(a.spaces) + " spaces enumerated, expected 119");
  for (const auto& [space, d] : a.discrepancies)
    fail(r, d.check + " on " + space_to_json(space).dump() + ": " + d.detail.dump());
  if (secs >= 300) fail(r, "took " + std::to_string(secs) + " s");
  if (r.pass)
    r.detail = std::to_string(a.spaces) + " spaces, " + std::to_string(a.checks_run) + " checks, " +
               std::to_string(a.skipped) + " skipped, 0 discrepancies, " + std::to_string(secs) + " s";
  return r;
}

// 3. |Sp(X)| <= |X| and both ball-count inequalities with their equality cases.
Result gomory_hu_sweep() {
  Result r;
  std::size_t checked = 0;
  auto check = [&](const Space& s) {
    ++checked;
    if (s.spectrum().size() > s.size()) fail(r, "spectrum larger than the space: " + space_to_json(s).dump());
    if (s.size() < 2) return;
    const RootedTree t = build_representing_tree(s);
    const auto delta = static_cast<std::int64_t>(t.max_out_degree());
    const auto x = static_cast<std::int64_t>(s.size());
    const auto balls = static_cast<std::int64_t>(ballean(t).size());
    const auto sp = static_cast<std::int64_t>(s.spectrum().size());
    const bool strictly = is_strictly_nary(t, t.max_out_degree()).holds;
    const bool injective = has_injective_internal_labels(t).holds;

    const Rational first(delta * x - 1, delta - 1);
    if (Rational(balls) < first || (Rational(balls) == first) != strictly)
      fail(r, "first ball bound on " + space_to_json(s).dump());
    const Rational second = Rational(sp) + Rational(2 * delta * x - delta - x, delta - 1);
    if (Rational(2 * balls) < second || (Rational(2 * balls) == second) != (strictly && injective))
      fail(r, "second ball bound on " + space_to_json(s).dump());
  };
  for (const Space& s : enumerated(1, 6)) check(s);
  for (std::uint64_t seed = 1; seed <= 10000; ++seed) check(random_space(1 + seed % 50, seed));
  if (r.pass) r.detail = std::to_string(checked) + " spaces, 0 violations";
  return r;
}

// 4. Closure under subspaces for the seven positive classes, small
// counterexamples for the seven negative ones.
Result hereditary_classification() {
  Result r;
  const auto t0 = Clock::now();
  std::ostringstream summary;
  for (ClassId id : {ClassId::U, ClassId::D, ClassId::StrictlyBinary, ClassId::R, ClassId::RTilde,
                     ClassId::BallPreserving, ClassId::LabelsSameLevel}) {
    const VerifyResult v = hereditary_verify(id, 6);
    summary << class_name(id) << (v.holds ? " closed" : " NOT closed") << ", ";
    if (!v.holds) {
      std::string what = std::string(class_name(id)) + " not closed";
      if (v.counterexample)
        what += ": " + space_to_json(v.counterexample->space).dump() + " loses membership on " +
                json(v.counterexample->subset).dump();
      fail(r, what);
    }
  }
  for (ClassId id : {ClassId::StrictlyNary, ClassId::T, ClassId::TSI, ClassId::Homogeneous, ClassId::LeavesSameLevel,
                     ClassId::PerfectNary, ClassId::UnrootedGenerated}) {
    const auto c = hereditary_counterexample_search(id, 6);
    if (!c) {
      fail(r, std::string("no counterexample for ") + std::string(class_name(id)));
      continue;
    }
    summary << class_name(id) << " broken at " << c->space.size() << " points, ";
    if (in_class(restrict(c->space, c->subset), id)) fail(r, std::string("bogus certificate for ") + std::string(class_name(id)));
    if (id == ClassId::TSI) {
      // the injective-label instance root(3) over u(2), v(1), three leaves each
      const Space inj = t6();
      if (!has_injective_internal_labels(build_representing_tree(inj)).holds || !in_class(inj, id) ||
          is_hereditary_instance(inj, id).holds)
        fail(r, "injective-label 6-point TSI instance is not a counterexample");
    }
    if (id == ClassId::UnrootedGenerated && c->space.size() != 5) fail(r, "unrooted-generated certificate size");
  }
  const double secs = seconds_since(t0);
  if (secs >= 300) fail(r, "took " + std::to_string(secs) + " s");
  r.detail = (r.pass ? "" : r.detail + " | ") + summary.str() + std::to_string(secs) + " s";
  return r;
}

// 5. Fast decisions against brute-force bijection searches.
Result oracle_equivalences() {
  Result r;
  std::mt19937_64 rng(2024);

  std::size_t iso_yes = 0;
  const auto pool7 = enumerated(2, 7);
  for (int i = 0; i < 1000; ++i) {
    const Space& a = pool7[rng() % pool7.size()];
    Space b = a;
    switch (i % 3) {
      case 0: b = scramble(a, rng); break;
      case 1: b = scramble(relabel_increasing(a, rng), rng); break;
      default: b = random_space(a.size(), rng()); break;
    }
    const bool fast = are_isometric(a, b);
    iso_yes += fast;
    if (fast != testing_oracles::isometric_bruteforce(a, b)) fail(r, "isometry disagreement on " + space_to_json(a).dump());
  }

  std::size_t weak_pairs = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto base = enumerate_spaces(n);
    std::vector<Space> images;
    for (const Space& s : base) images.push_back(scramble(relabel_increasing(s, rng), rng));
    for (const Space& a : base)
      for (const Space& b : images) {
        ++weak_pairs;
        if (are_weakly_similar(a, b).has_value() != testing_oracles::weakly_similar_bruteforce(a, b))
          fail(r, "weak similarity disagreement on " + space_to_json(a).dump());
      }
  }

  for (const Space& s : pool7)
    if (count_self_isometries(build_representing_tree(s)) != testing_oracles::self_isometry_count_bruteforce(s))
      fail(r, "self-isometry count disagreement on " + space_to_json(s).dump());

  std::size_t graphs = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + trial % 8;
    std::vector<PointId> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<std::pair<PointId, PointId>> edges;
    std::vector<std::size_t> block(n);
    for (auto& b : block) b = rng() % n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool planted = block[i] != block[j];
        const bool keep = trial % 3 == 0 ? rng() % 2 == 0 : (trial % 3 == 1 ? planted : planted != (rng() % 20 == 0));
        if (keep) edges.emplace_back(vs[i], vs[j]);
      }
    const SimpleGraph g(vs, edges);
    ++graphs;
    if (complete_multipartite_parts(g) != testing_oracles::multipartite_bruteforce(g)) fail(r, "multipartite disagreement");
  }

  if (r.pass)
    r.detail = "1000 isometry pairs (" + std::to_string(iso_yes) + " isometric), " + std::to_string(weak_pairs) +
               " weak-similarity pairs, " + std::to_string(pool7.size()) + " self-isometry counts, " +
               std::to_string(graphs) + " graphs, 0 disagreements";
  return r;
}

// 6. Shape and spectrum determine small spaces and shapes meeting the
// guarantee.
Result tsi_base_case() {
  Result r;
  std::size_t small = 0, guaranteed = 0;
  for (const Space& s : enumerated(2, 4)) {
    ++small;
    if (!tsi_oracle(s).holds) fail(r, "not determined: " + space_to_json(s).dump());
  }
  for (const Space& s : enumerated(2, 8)) {
    const RootedTree t = build_representing_tree(s);
    if (t.internal_nodes().size() > kTsiMaxInternalNodes || !tsi_shape_guarantee(t).holds) continue;
    ++guaranteed;
    if (!tsi_oracle(s).holds) fail(r, "shape guarantee without determination: " + space_to_json(s).dump());
  }
  if (r.pass)
    r.detail = std::to_string(small) + " spaces with at most 4 points, " + std::to_string(guaranteed) +
               " labelings of guaranteed shapes";
  return r;
}

// 7. Representing tree and class report for 500 points.
Result performance() {
  Result r;
  const Space s = random_space(500, 77);
  const auto t0 = Clock::now();
  const RootedTree t = build_representing_tree(s);
  const ClassReport report = classify(s);
  const double secs = seconds_since(t0);
  if (t.leaf_count() != 500 || report.entries.size() != 14) fail(r, "incomplete result");
  if (secs >= 2.0) fail(r, "took " + std::to_string(secs) + " s");
  if (r.pass) r.detail = std::to_string(t.node_count()) + " nodes, " + std::to_string(secs) + " s";
  return r;
}

}  // namespace

int main() {
  setenv("ULTRAFOREST_THREADS", "1", 0);
  const std::vector<std::pair<const char*, Result (*)()>> criteria{
      {"figure round trip", figure_round_trip},
      {"exhaustive theorem audit", exhaustive_audit},
      {"Gomory-Hu and ball-count sweep", gomory_hu_sweep},
      {"hereditary classification", hereditary_classification},
      {"oracle equivalences", oracle_equivalences},
      {"shape and spectrum base case", tsi_base_case},
      {"500-point performance", performance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result res;
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    failed += !res.pass;
    std::cout << (res.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << res.detail
              << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
