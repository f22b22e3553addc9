// ultraforest: command-line front end.
//
// Exit codes: 0 success or a true verdict, 1 a false verdict (with its
// certificate on standard output), 2 malformed input or arguments.

#include "ultraforest/audit.hpp"
#include "ultraforest/canonical.hpp"
#include "ultraforest/classify.hpp"
#include "ultraforest/error.hpp"
#include "ultraforest/gen.hpp"
#include "ultraforest/graphs.hpp"
#include "ultraforest/hereditary.hpp"
#include "ultraforest/io.hpp"
#include "ultraforest/unrooted.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ultraforest;
using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  std::string out;
};

struct Outcome {
  int code = 0;
  std::string text;
};

bool as_json(const Options& o) { return o.format == "json"; }

std::string spectrum_text(const std::vector<Rational>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + to_string(values[i]);
  return s + "}";
}

json spectrum_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_fraction_string(v));
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void outline(const RootedTree& tree, NodeId v, std::size_t depth, std::ostringstream& os) {
  os << std::string(depth * 2, ' ');
  if (tree.is_leaf(v))
    os << tree.point(v) << '\n';
  else
    os << to_string(tree.label(v)) << "  [" << tree.leaf_set(v).size() << " points]\n";
  for (NodeId c : tree.children(v)) outline(tree, c, depth + 1, os);
}

json counterexample_json(const Counterexample& c) {
  return {{"space", space_to_json(c.space)}, {"subset", c.subset}};
}

Document load_as(const std::string& from, const std::string& path) {
  Document doc = load_document(path);
  const char* actual = std::holds_alternative<Space>(doc)        ? "matrix"
                       : std::holds_alternative<RootedTree>(doc) ? "tree"
                                                                 : "unrooted";
  if (from != "auto" && from != actual)
    throw Error(Errc::FormatMismatch, path + " holds a " + actual + " document, not a " + from);
  return doc;
}

Outcome cmd_validate(const Options& o, const std::string& path) {
  const Space s = load_space(path);
  if (as_json(o))
    return {0, dump({{"valid", true}, {"points", s.size()}, {"spectrum", spectrum_json(s.spectrum())}})};
  return {0, "valid ultrametric space: " + std::to_string(s.size()) + " points, spectrum " +
                 spectrum_text(s.spectrum()) + "\n"};
}

Outcome cmd_tree(const Options& o, const std::string& path, bool dot) {
  const RootedTree tree = build_representing_tree(load_space(path));
  if (dot) return {0, tree_to_dot(tree)};
  if (as_json(o)) return {0, dump(tree_to_json(tree))};
  std::ostringstream os;
  os << "height " << tree.height() << ", max out-degree " << tree.max_out_degree() << ", " << tree.node_count()
     << " balls\n";
  outline(tree, tree.root(), 0, os);
  return {0, os.str()};
}

Outcome cmd_classify(const Options& o, const std::string& path, const std::string& class_id) {
  const Space s = load_space(path);
  const ClassReport report = classify(s);
  if (class_id.empty()) return {0, as_json(o) ? dump(to_json(report)) : to_text(report)};
  const ClassId id = parse_class(class_id);
  for (const auto& e : report.entries) {
    if (e.id != id) continue;
    const int code = e.holds.value_or(false) ? 0 : 1;
    if (as_json(o))
      return {code, dump({{"class", class_name(id)},
                          {"member", e.holds ? json(*e.holds) : json(nullptr)},
                          {"certificate", e.certificate}})};
    std::string verdict = e.holds ? (*e.holds ? "yes" : "no") : "undetermined";
    return {code, std::string(class_name(id)) + ": " + verdict + "  " + e.certificate.dump() + "\n"};
  }
  return {2, ""};
}

Outcome cmd_audit(const Options& o, const std::string& path, bool exhaustive, std::size_t max_n) {
  if (exhaustive) {
    const ExhaustiveAudit r = audit_exhaustive(max_n);
    const int code = r.discrepancies.empty() ? 0 : 1;
    if (as_json(o)) {
      json d = json::array();
      for (const auto& [space, disc] : r.discrepancies)
        d.push_back({{"space", space_to_json(space)}, {"check", disc.check}, {"detail", disc.detail}});
      return {code, dump({{"spaces", r.spaces}, {"checks_run", r.checks_run}, {"skipped", r.skipped}, {"discrepancies", d}})};
    }
    std::ostringstream os;
    os << r.spaces << " spaces, " << r.checks_run << " checks, " << r.skipped << " skipped, "
       << r.discrepancies.size() << " discrepancies\n";
    for (const auto& [space, disc] : r.discrepancies)
      os << "  " << disc.check << " on " << space_to_json(space).dump() << ": " << disc.detail.dump() << '\n';
    return {code, os.str()};
  }
  if (path.empty()) throw Error(Errc::InvalidArgument, "audit needs an input file or --exhaustive");
  const AuditReport r = audit_equivalences(load_space(path));
  const int code = r.discrepancies.empty() ? 0 : 1;
  if (as_json(o)) return {code, dump(to_json(r))};
  std::ostringstream os;
  os << r.checks_run << " checks, " << r.skipped.size() << " skipped, " << r.discrepancies.size() << " discrepancies\n";
  for (const auto& d : r.discrepancies) os << "  " << d.check << ": " << d.detail.dump() << '\n';
  return {code, os.str()};
}

Outcome cmd_isometric(const Options& o, const std::string& a, const std::string& b) {
  const bool same = are_isometric(load_space(a), load_space(b));
  if (as_json(o)) return {same ? 0 : 1, dump({{"isometric", same}})};
  return {same ? 0 : 1, same ? "isometric\n" : "not isometric\n"};
}

Outcome cmd_weaksim(const Options& o, const std::string& a, const std::string& b) {
  const auto scaling = are_weakly_similar(load_space(a), load_space(b));
  if (as_json(o)) {
    json j{{"weakly_similar", scaling.has_value()}};
    if (scaling) {
      json pairs = json::array();
      for (const auto& [from, to] : scaling->pairs) pairs.push_back({to_fraction_string(from), to_fraction_string(to)});
      j["scaling"] = pairs;
    }
    return {scaling ? 0 : 1, dump(j)};
  }
  if (!scaling) return {1, "not weakly similar\n"};
  std::string s = "weakly similar; scaling";
  for (const auto& [from, to] : scaling->pairs) s += " " + to_string(from) + "->" + to_string(to);
  return {0, s + "\n"};
}

Outcome cmd_convert(const std::string& path, const std::string& from, const std::string& to) {
  const Document doc = load_as(from, path);
  if (to == "unrooted" || to == "unrooted-dot") {
    UnrootedTree u = std::holds_alternative<UnrootedTree>(doc)
                         ? std::get<UnrootedTree>(doc)
                         : unrooted_from_representing(build_representing_tree(document_space(doc)));
    return {0, to == "unrooted" ? dump(unrooted_to_json(u)) : unrooted_to_dot(u)};
  }
  const Space s = document_space(doc);
  if (to == "matrix") return {0, dump(space_to_json(s))};
  if (to == "csv") return {0, write_space_csv(s)};
  const RootedTree tree = std::holds_alternative<RootedTree>(doc) ? std::get<RootedTree>(doc) : build_representing_tree(s);
  if (to == "tree") return {0, dump(tree_to_json(tree))};
  if (to == "dot") return {0, tree_to_dot(tree)};
  throw Error(Errc::InvalidArgument, "unknown target format '" + to + "'");
}

Outcome cmd_graph(const Options& o, const std::string& path, const std::string& r, bool strip, bool dot) {
  const Space s = load_space(path);
  const Rational radius = r.empty() ? diameter(s) : parse_rational(r);
  SimpleGraph g = level_graph(s, radius);
  if (strip) g = strip_isolated(g);
  if (dot) return {0, graph_to_dot(g, "G_" + to_string(radius))};
  if (as_json(o)) {
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({g.vertices()[a], g.vertices()[b]});
    json j{{"r", to_fraction_string(radius)}, {"vertices", g.vertices()}, {"edges", edges}};
    if (auto parts = complete_multipartite_parts(g)) j["parts"] = *parts;
    return {0, dump(j)};
  }
  return {0, write_edge_list(g)};
}

Outcome cmd_hereditary(const Options& o, const std::string& mode, const std::string& class_id, const std::string& path,
                       std::size_t max_n, std::size_t budget, bool full) {
  const ClassId id = parse_class(class_id);
  if (mode == "verify") {
    const VerifyResult r = hereditary_verify(id, max_n);
    const int code = r.holds ? 0 : 1;
    if (as_json(o)) {
      json j{{"class", class_name(id)}, {"max_n", max_n}, {"hereditary", r.holds}, {"members", r.members}};
      if (r.counterexample) j["counterexample"] = counterexample_json(*r.counterexample);
      return {code, dump(j)};
    }
    std::string s = std::string(class_name(id)) + ": " + (r.holds ? "closed" : "not closed") +
                    " under subspaces up to " + std::to_string(max_n) + " points (" + std::to_string(r.members) +
                    " members)\n";
    if (r.counterexample) s += dump(counterexample_json(*r.counterexample));
    return {code, s};
  }
  if (mode == "counterexample") {
    const auto c = hereditary_counterexample_search(id, max_n, budget);
    if (as_json(o)) {
      json j{{"class", class_name(id)}, {"max_n", max_n}, {"found", c.has_value()}};
      if (c) j["counterexample"] = counterexample_json(*c);
      return {c ? 0 : 1, dump(j)};
    }
    if (!c) return {1, "no counterexample with at most " + std::to_string(max_n) + " points\n"};
    return {0, dump(counterexample_json(*c))};
  }
  if (mode == "instance") {
    if (path.empty()) throw Error(Errc::InvalidArgument, "hereditary instance needs an input file");
    const auto r = is_hereditary_instance(load_space(path), id, full);
    json j{{"class", class_name(id)}, {"hereditary", r.holds}};
    if (r.witness) j["witness"] = *r.witness;
    return {r.holds ? 0 : 1, as_json(o) ? dump(j) : (r.holds ? "closed\n" : "violated by " + json(*r.witness).dump() + "\n")};
  }
  throw Error(Errc::InvalidArgument, "hereditary mode must be verify, counterexample or instance");
}

Outcome cmd_generate(std::size_t n, std::uint64_t seed, std::size_t count, bool exhaustive, bool unrooted) {
  std::string out;
  if (exhaustive) {
    for (const auto& s : enumerate_spaces(n)) out += space_to_json(s).dump() + "\n";
    return {0, out};
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = seed + i;
    out += (unrooted ? unrooted_to_json(random_unrooted(n, s)) : space_to_json(random_space(n, s))).dump() + "\n";
  }
  return {0, out};
}

Outcome cmd_fingerprint(const Options& o, const std::string& path, const std::string& mode) {
  const RootedTree tree = build_representing_tree(load_space(path));
  CodeMode m = CodeMode::Labeled;
  if (mode == "unlabeled")
    m = CodeMode::Unlabeled;
  else if (mode == "rank")
    m = CodeMode::RankLabeled;
  else if (mode != "labeled")
    throw Error(Errc::InvalidArgument, "fingerprint mode must be labeled, unlabeled or rank");
  const std::string code = canonical_code(tree, m).code;
  if (as_json(o)) return {0, dump({{"mode", mode}, {"code", code}})};
  return {0, code + "\n"};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write " + o.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ultrametric spaces: representing trees, classes and audits"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opts.out, "Write output to this file");

  std::string input, second, class_id, from = "auto", to = "tree", mode = "labeled", radius, hmode;
  std::size_t max_n = 6, count = 1, budget = 0, n = 5;
  std::uint64_t seed = 1;
  bool dot = false, exhaustive = false, full = false, unrooted = false, strip = false;

  auto* validate = app.add_subcommand("validate", "Check a distance matrix");
  validate->add_option("input", input, "Matrix (.csv or JSON), tree or unrooted tree")->required();

  auto* tree = app.add_subcommand("tree", "Print the representing tree");
  tree->add_option("input", input)->required();
  tree->add_flag("--dot", dot, "Graphviz output");

  auto* cls = app.add_subcommand("classify", "Report class membership");
  cls->add_option("input", input)->required();
  cls->add_option("--class", class_id, "Only this class; exit 1 when not a member");

  auto* audit = app.add_subcommand("audit", "Cross-check characterizations");
  audit->add_option("input", input);
  audit->add_flag("--exhaustive", exhaustive, "Audit every enumerated space");
  audit->add_option("--max-n", max_n, "Largest enumerated size");

  auto* iso = app.add_subcommand("isometric", "Decide isometry");
  iso->add_option("a", input)->required();
  iso->add_option("b", second)->required();

  auto* weak = app.add_subcommand("weaksim", "Decide weak similarity");
  weak->add_option("a", input)->required();
  weak->add_option("b", second)->required();

  auto* convert = app.add_subcommand("convert", "Convert between formats");
  convert->add_option("input", input)->required();
  convert->add_option("--from", from)->check(CLI::IsMember({"auto", "matrix", "tree", "unrooted"}));
  convert->add_option("--to", to)->check(CLI::IsMember({"matrix", "csv", "tree", "dot", "unrooted", "unrooted-dot"}));

  auto* graph = app.add_subcommand("graph", "Level graph G_{r,X}");
  graph->add_option("input", input)->required();
  graph->add_option("--r", radius, "Distance value (default: diameter)");
  graph->add_flag("--strip", strip, "Drop isolated vertices");
  graph->add_flag("--dot", dot, "Graphviz output");

  auto* her = app.add_subcommand("hereditary", "Subspace closure of a class");
  her->add_option("mode", hmode, "verify | counterexample | instance")
      ->required()
      ->check(CLI::IsMember({"verify", "counterexample", "instance"}));
  her->add_option("class", class_id)->required();
  her->add_option("input", input, "Space for the instance mode");
  her->add_option("--max-n", max_n);
  her->add_option("--budget", budget, "Cap on enumerated spaces examined (0: none)");
  her->add_flag("--full", full, "Test every subset directly (at most 8 points)");

  auto* gen = app.add_subcommand("generate", "Emit spaces as JSON lines");
  gen->add_option("--n", n)->check(CLI::Range(1, 100000));
  gen->add_option("--seed", seed);
  gen->add_option("--count", count);
  gen->add_flag("--exhaustive", exhaustive, "All spaces up to weak similarity");
  gen->add_flag("--unrooted", unrooted, "Random unrooted labeled trees instead");

  auto* fp = app.add_subcommand("fingerprint", "Canonical code of the representing tree");
  fp->add_option("input", input)->required();
  fp->add_option("--mode", mode)->check(CLI::IsMember({"labeled", "unlabeled", "rank"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome r;
    if (*validate) r = cmd_validate(opts, input);
    else if (*tree) r = cmd_tree(opts, input, dot);
    else if (*cls) r = cmd_classify(opts, input, class_id);
    else if (*audit) r = cmd_audit(opts, input, exhaustive, max_n);
    else if (*iso) r = cmd_isometric(opts, input, second);
    else if (*weak) r = cmd_weaksim(opts, input, second);
    else if (*convert) r = cmd_convert(input, from, to);
    else if (*graph) r = cmd_graph(opts, input, radius, strip, dot);
    else if (*her) r = cmd_hereditary(opts, hmode, class_id, input, max_n, budget, full);
    else if (*gen) r = cmd_generate(n, seed, count, exhaustive, unrooted);
    else if (*fp) r = cmd_fingerprint(opts, input, mode);
    emit(opts, r.text);
    return r.code;
  } catch (const Error& e) {
    if (opts.format == "json") {
      std::cout << json{{"error", errc_name(e.code())}, {"message", e.what()}, {"witness", e.witness()}}.dump(2) << '\n';
    } else {
      std::cerr << "error: " << e.what();
      if (!e.witness().empty()) {
        std::cerr << " [witness:";
        for (const auto& w : e.witness()) std::cerr << ' ' << w;
        std::cerr << ']';
      }
      std::cerr << '\n';
    }
    return 2;
  }
}
