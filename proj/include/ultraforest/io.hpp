#pragma once

#include "ultraforest/graphs.hpp"
#include "ultraforest/space.hpp"
#include "ultraforest/tree.hpp"
#include "ultraforest/unrooted.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace ultraforest {

// Text formats. Every rational is written as an exact "p/q" string and read
// back from "p", "p/q", a decimal literal or a JSON integer. Parse failures
// raise Error(ParseError) naming the source and position; a well-formed
// document of the wrong kind raises Error(FormatMismatch).

/// Distance matrix as CSV: a header row of point ids (optionally preceded
/// by an empty corner cell) and one row per point, optionally led by its id.
Space parse_space_csv(std::string_view text, std::string_view source = "<input>");
std::string write_space_csv(const Space& space);

/// {"points": [...], "dist": [[...], ...]}
Space space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const Space& space);

/// {"label": "p/q", "point": id, "children": [...]}; leaves carry "point".
TreeSpec tree_from_json(const nlohmann::json& j);
nlohmann::json tree_to_json(const RootedTree& tree);

/// {"vertices": [{"id": id, "label": "p/q"}, ...], "edges": [[u, v], ...]}
UnrootedTree unrooted_from_json(const nlohmann::json& j);
nlohmann::json unrooted_to_json(const UnrootedTree& tree);

/// Whitespace separated "u v" lines; isolated vertices are listed alone.
std::string write_edge_list(const SimpleGraph& g);

/// Graphviz exports: internal nodes show their label, leaves their point.
std::string tree_to_dot(const RootedTree& tree);
std::string unrooted_to_dot(const UnrootedTree& tree);
std::string graph_to_dot(const SimpleGraph& g, std::string_view name = "G");

enum class DocKind { Space, Tree, Unrooted };

using Document = std::variant<Space, RootedTree, UnrootedTree>;

/// Parses JSON text with position-aware errors.
nlohmann::json parse_json(std::string_view text, std::string_view source = "<input>");
/// Recognizes a space, rooted tree or unrooted tree document.
DocKind detect_kind(const nlohmann::json& j);

/// Reads a file (or "-" for standard input): .csv as a matrix, anything
/// else as JSON of any of the three kinds.
Document load_document(const std::string& path);
/// The space described by any document kind.
Space document_space(const Document& doc);
/// load_document followed by document_space.
Space load_space(const std::string& path);

std::string read_text(const std::string& path);

}  // namespace ultraforest
