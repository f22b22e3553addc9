#include "fixtures.hpp"

#include "ultraforest/io.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace fixtures;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI through the shell; `tail` is appended verbatim (redirections).
Run run(const std::string& args, const std::string& tail = "") {
  const std::string cmd = std::string(ULTRAFOREST_CLI) + " " + args + " " + tail;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(ULTRAFOREST_TEST_DATA) + "/" + name; }

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ultraforest_cli_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

}  // namespace

TEST_CASE("validate") {
  const Run ok = run("validate " + data("isosceles.csv"));
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid ultrametric space: 3 points, spectrum {0,1,2}\n");

  const Run bad = run("validate " + data("triangle_violation.csv"), "2>&1");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("StrongTriangleViolation") != std::string::npos);
  CHECK(bad.out.find("[witness: b c a]") != std::string::npos);

  const Run js = run("validate --format json " + data("triangle_violation.csv"));
  CHECK(js.code == 2);
  const json j = json::parse(js.out);
  CHECK(j["error"] == "StrongTriangleViolation");
  CHECK(j["witness"] == json({"b", "c", "a"}));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("", "2>/dev/null").code == 2);
  CHECK(run("frobnicate", "2>/dev/null").code == 2);
  CHECK(run("validate " + data("nope.csv"), "2>/dev/null").code == 2);
  CHECK(run("classify --class nonsense " + data("isosceles.csv"), "2>/dev/null").code == 2);
}

TEST_CASE("tree") {
  const Run r = run("tree " + data("isosceles.csv"));
  CHECK(r.code == 0);
  CHECK(r.out == "height 2, max out-degree 2, 5 balls\n2  [3 points]\n  c\n  1  [2 points]\n    a\n    b\n");
  const Run js = run("tree --format json " + data("fig_tree.json"));
  CHECK(RootedTree(tree_from_json(json::parse(js.out))) == RootedTree(figure_spec()));
  CHECK(run("tree --dot " + data("isosceles.csv")).out.rfind("digraph", 0) == 0);
}

TEST_CASE("classify") {
  CHECK(run("classify --class U " + data("isosceles.csv")).code == 0);
  CHECK(run("classify --class U " + data("equilateral.json")).code == 1);
  const Run all = run("classify --format json " + data("equilateral.json"));
  CHECK(all.code == 0);
  const json j = json::parse(all.out);
  CHECK(j["points"] == 3);
}

TEST_CASE("isometric and weaksim") {
  const std::string scaled = tmp("scaled.csv");
  write(scaled, "a,b,c\n0,3,5\n3,0,5\n5,5,0\n");
  CHECK(run("isometric " + data("isosceles.csv") + " " + data("isosceles.csv")).code == 0);
  CHECK(run("isometric " + data("isosceles.csv") + " " + scaled).code == 1);
  const Run w = run("weaksim " + data("isosceles.csv") + " " + scaled);
  CHECK(w.code == 0);
  CHECK(w.out == "weakly similar; scaling 0->0 1->3 2->5\n");
  CHECK(run("weaksim " + data("isosceles.csv") + " " + data("equilateral.json")).code == 1);
  std::filesystem::remove(scaled);
}

TEST_CASE("convert chain reproduces the matrix") {
  const std::string matrix = tmp("fig.json");
  const std::string unrooted = tmp("fig_unrooted.json");
  const std::string csv = tmp("fig.csv");
  const std::string back = tmp("fig_back.csv");
  write(matrix, space_to_json(figure_space()).dump());
  CHECK(run("convert --from matrix --to unrooted " + matrix + " --out " + unrooted).code == 0);
  const UnrootedTree u = unrooted_from_json(json::parse(read_text(unrooted)));
  CHECK(u.edge_ids() == unrooted_from_representing(RootedTree(figure_spec())).edge_ids());
  CHECK(run("convert --to csv " + matrix + " --out " + csv).code == 0);
  CHECK(run("convert --from unrooted --to csv " + unrooted + " --out " + back).code == 0);
  CHECK(load_space(back) == reorder(figure_space(), load_space(back).points()));
  CHECK(run("convert --from tree --to csv " + matrix, "2>/dev/null").code == 2);
  for (const auto& f : {matrix, unrooted, csv, back}) std::filesystem::remove(f);
}

TEST_CASE("graph") {
  const Run r = run("graph --r 1 " + data("isosceles.csv"));
  CHECK(r.out == "a b\nc\n");
  const Run s = run("graph --format json --strip " + data("isosceles.csv"));
  const json j = json::parse(s.out);
  CHECK(j["parts"] == json({{"c"}, {"a", "b"}}));
  CHECK(run("graph --r 9 " + data("isosceles.csv"), "2>/dev/null").code == 2);
}

TEST_CASE("audit") {
  const Run one = run("audit " + data("isosceles.csv"));
  CHECK(one.code == 0);
  CHECK(one.out.find("0 discrepancies") != std::string::npos);
  const Run ex = run("audit --exhaustive --max-n 4");
  CHECK(ex.code == 0);
  CHECK(ex.out.find(" 0 discrepancies") != std::string::npos);
}

TEST_CASE("hereditary") {
  CHECK(run("hereditary verify U --max-n 5").code == 0);
  CHECK(run("hereditary verify homogeneous --max-n 5").code == 1);
  const Run c = run("hereditary counterexample T --max-n 6 --format json");
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["counterexample"]["space"]["points"].size() == 6);
  CHECK(run("hereditary counterexample U --max-n 4").code == 1);
  CHECK(run("hereditary counterexample T --max-n 6 --budget 1", "2>/dev/null").code == 2);
  CHECK(run("hereditary instance U " + data("isosceles.csv")).code == 0);
  CHECK(run("hereditary instance strictly-nary " + data("equilateral.json")).code == 1);
}

TEST_CASE("generate and fingerprint") {
  const Run g = run("generate --n 5 --seed 7 --count 3");
  CHECK(g.code == 0);
  CHECK(std::count(g.out.begin(), g.out.end(), '\n') == 3);
  CHECK(run("generate --n 5 --seed 7 --count 3").out == g.out);
  const Run ex = run("generate --n 4 --exhaustive");
  CHECK(std::count(ex.out.begin(), ex.out.end(), '\n') == 6);

  const Run f1 = run("fingerprint --mode unlabeled " + data("isosceles.csv"));
  const std::string scaled = tmp("fp.csv");
  write(scaled, "p,q,r\n0,3,5\n3,0,5\n5,5,0\n");
  CHECK(run("fingerprint --mode unlabeled " + scaled).out == f1.out);
  CHECK(run("fingerprint --mode rank " + scaled).out == run("fingerprint --mode rank " + data("isosceles.csv")).out);
  CHECK(run("fingerprint " + scaled).out != run("fingerprint " + data("isosceles.csv")).out);
  std::filesystem::remove(scaled);
}
