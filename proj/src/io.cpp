#include "ultraforest/io.hpp"

#include "ultraforest/error.hpp"

#include <fstream>
#include <iostream>
#include <functional>
#include <sstream>

namespace ultraforest {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(std::string_view source, std::size_t line, std::size_t col, const std::string& why) {
  throw Error(Errc::ParseError,
              std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + why,
              {std::string(source), std::to_string(line), std::to_string(col)});
}

[[noreturn]] void mismatch(const std::string& why) { throw Error(Errc::FormatMismatch, why); }

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      out.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  out.push_back(cell);
  for (auto& s : out) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  }
  return out;
}

Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  mismatch(where + " must be an integer or a rational string, got " + std::string(v.type_name()));
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) mismatch(where + " lacks \"" + key + "\"");
  return j.at(key);
}

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Space parse_space_csv(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_no;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
    rows.push_back(split_csv_line(line));
    line_no.push_back(n);
  }
  if (rows.empty()) parse_fail(source, 1, 1, "no header row");
  std::vector<std::string> header = rows.front();
  const bool corner = !header.empty() && header.front().empty();
  if (corner) header.erase(header.begin());
  const std::size_t n = header.size();
  std::vector<std::vector<Rational>> matrix;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    auto cells = rows[r];
    const bool labeled = cells.size() == n + 1;
    if (cells.size() != n && !labeled)
      parse_fail(source, line_no[r], 1,
                 "row has " + std::to_string(cells.size()) + " cells, expected " + std::to_string(n));
    if (labeled) {
      if (r - 1 < n && cells.front() != header[r - 1])
        parse_fail(source, line_no[r], 1, "row label '" + cells.front() + "' does not match column '" + header[r - 1] + "'");
      cells.erase(cells.begin());
    }
    std::vector<Rational> row;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      try {
        row.push_back(parse_rational(cells[c]));
      } catch (const Error& e) {
        const std::string why = e.what();
        parse_fail(source, line_no[r], c + 1 + labeled, why.substr(errc_name(e.code()).size() + 2));
      }
    }
    matrix.push_back(std::move(row));
  }
  return validate_space(matrix, header);
}

std::string write_space_csv(const Space& space) {
  std::ostringstream os;
  for (std::size_t i = 0; i < space.size(); ++i) os << ',' << space.point(i);
  os << '\n';
  for (std::size_t i = 0; i < space.size(); ++i) {
    os << space.point(i);
    for (std::size_t j = 0; j < space.size(); ++j) os << ',' << to_fraction_string(space.dist(i, j));
    os << '\n';
  }
  return os.str();
}

Space space_from_json(const json& j) {
  const json& pts = require(j, "points", "space document");
  const json& dist = require(j, "dist", "space document");
  if (!pts.is_array() || !dist.is_array()) mismatch("\"points\" and \"dist\" must be arrays");
  std::vector<PointId> points;
  for (const auto& p : pts) {
    if (!p.is_string()) mismatch("point ids must be strings");
    points.push_back(p.get<std::string>());
  }
  std::vector<std::vector<Rational>> matrix;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (!dist[i].is_array()) mismatch("\"dist\" row " + std::to_string(i) + " is not an array");
    std::vector<Rational> row;
    for (std::size_t k = 0; k < dist[i].size(); ++k)
      row.push_back(rational_from_json(dist[i][k], "dist[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    matrix.push_back(std::move(row));
  }
  return validate_space(matrix, points);
}

json space_to_json(const Space& space) {
  json dist = json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < space.size(); ++k) row.push_back(to_fraction_string(space.dist(i, k)));
    dist.push_back(row);
  }
  return {{"points", space.points()}, {"dist", dist}};
}

TreeSpec tree_from_json(const json& j) {
  if (!j.is_object()) mismatch("tree node must be an object");
  TreeSpec spec;
  if (j.contains("label")) spec.label = rational_from_json(j.at("label"), "tree label");
  if (j.contains("point")) {
    if (!j.at("point").is_string()) mismatch("tree \"point\" must be a string");
    spec.point = j.at("point").get<std::string>();
  }
  if (j.contains("children")) {
    if (!j.at("children").is_array()) mismatch("tree \"children\" must be an array");
    for (const auto& c : j.at("children")) spec.children.push_back(tree_from_json(c));
  }
  return spec;
}

json tree_to_json(const RootedTree& tree) {
  std::function<json(NodeId)> rec = [&](NodeId v) {
    json out{{"label", to_fraction_string(tree.label(v))}};
    if (tree.is_leaf(v)) {
      out["point"] = tree.point(v);
      return out;
    }
    json kids = json::array();
    for (NodeId c : tree.children(v)) kids.push_back(rec(c));
    out["children"] = kids;
    return out;
  };
  return rec(tree.root());
}

UnrootedTree unrooted_from_json(const json& j) {
  const json& vs = require(j, "vertices", "unrooted tree document");
  const json& es = require(j, "edges", "unrooted tree document");
  if (!vs.is_array() || !es.is_array()) mismatch("\"vertices\" and \"edges\" must be arrays");
  std::vector<UnrootedTree::Vertex> vertices;
  for (const auto& v : vs) {
    const json& id = require(v, "id", "vertex");
    if (!id.is_string()) mismatch("vertex ids must be strings");
    vertices.push_back({id.get<std::string>(), rational_from_json(require(v, "label", "vertex"), "vertex label")});
  }
  std::vector<std::pair<PointId, PointId>> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      mismatch("each edge must be a pair of vertex ids");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return UnrootedTree(std::move(vertices), edges);
}

json unrooted_to_json(const UnrootedTree& tree) {
  json vs = json::array();
  for (const auto& v : tree.vertices()) vs.push_back({{"id", v.id}, {"label", to_fraction_string(v.label)}});
  json es = json::array();
  for (const auto& [a, b] : tree.edge_ids()) es.push_back({a, b});
  return {{"vertices", vs}, {"edges", es}};
}

std::string write_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  std::vector<char> touched(g.vertex_count(), 0);
  for (auto [a, b] : g.edges()) {
    os << g.vertices()[a] << ' ' << g.vertices()[b] << '\n';
    touched[a] = touched[b] = 1;
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (!touched[i]) os << g.vertices()[i] << '\n';
  return os.str();
}

std::string tree_to_dot(const RootedTree& tree) {
  std::ostringstream os;
  os << "digraph T {\n  node [shape=circle, fontsize=10];\n";
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (tree.is_leaf(v))
      os << "  n" << v << " [shape=plaintext, label=\"" << dot_escape(tree.point(v)) << "\"];\n";
    else
      os << "  n" << v << " [label=\"\", xlabel=\"" << to_string(tree.label(v)) << "\"];\n";
  }
  for (NodeId v = 0; v < tree.node_count(); ++v)
    for (NodeId c : tree.children(v)) os << "  n" << v << " -> n" << c << ";\n";
  os << "}\n";
  return os.str();
}

std::string unrooted_to_dot(const UnrootedTree& tree) {
  std::ostringstream os;
  os << "graph T {\n  node [shape=circle, fontsize=10];\n";
  for (const auto& v : tree.vertices())
    os << "  \"" << dot_escape(v.id) << "\" [xlabel=\"" << to_string(v.label) << "\"];\n";
  for (const auto& [a, b] : tree.edge_ids()) os << "  \"" << dot_escape(a) << "\" -- \"" << dot_escape(b) << "\";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_dot(const SimpleGraph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph \"" << dot_escape(name) << "\" {\n";
  for (const auto& v : g.vertices()) os << "  \"" << dot_escape(v) << "\";\n";
  for (auto [a, b] : g.edges())
    os << "  \"" << dot_escape(g.vertices()[a]) << "\" -- \"" << dot_escape(g.vertices()[b]) << "\";\n";
  os << "}\n";
  return os.str();
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    parse_fail(source, line, col, e.what());
  }
}

DocKind detect_kind(const json& j) {
  if (j.is_object()) {
    if (j.contains("dist")) return DocKind::Space;
    if (j.contains("vertices") && j.contains("edges")) return DocKind::Unrooted;
    if (j.contains("children") || j.contains("point")) return DocKind::Tree;
  }
  mismatch("document is neither a space, a rooted tree nor an unrooted tree");
}

std::string read_text(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, path + ": cannot open file", {path});
  os << in.rdbuf();
  return os.str();
}

Document load_document(const std::string& path) {
  const std::string text = read_text(path);
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (csv || (first != std::string::npos && text[first] != '{')) return parse_space_csv(text, path);
  const json j = parse_json(text, path);
  switch (detect_kind(j)) {
    case DocKind::Space: return space_from_json(j);
    case DocKind::Tree: return RootedTree(tree_from_json(j));
    case DocKind::Unrooted: return unrooted_from_json(j);
  }
  mismatch("unreachable");
}

Space document_space(const Document& doc) {
  if (auto s = std::get_if<Space>(&doc)) return *s;
  if (auto t = std::get_if<RootedTree>(&doc)) return tree_to_space(*t);
  return space_from_unrooted(std::get<UnrootedTree>(doc));
}

Space load_space(const std::string& path) { return document_space(load_document(path)); }

}  // namespace ultraforest
