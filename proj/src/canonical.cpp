#include "ultraforest/canonical.hpp"

#include <algorithm>
#include <map>

namespace ultraforest {
namespace {

template <class TokenFn>
std::vector<std::string> codes_bottom_up(const RootedTree& tree, TokenFn token) {
  std::vector<std::string> codes(tree.node_count());
  std::vector<const std::string*> kids;
  for (NodeId v = tree.node_count(); v-- > 0;) {
    std::string code = "(";
    code += token(v);
    kids.clear();
    for (NodeId c : tree.children(v)) kids.push_back(&codes[c]);
    std::sort(kids.begin(), kids.end(), [](const std::string* a, const std::string* b) { return *a < *b; });
    for (const auto* k : kids) code += *k;
    code += ')';
    codes[v] = std::move(code);
  }
  return codes;
}

}  // namespace

std::vector<std::string> node_codes(const RootedTree& tree, CodeMode mode) {
  switch (mode) {
    case CodeMode::Labeled:
      return codes_bottom_up(tree, [&](NodeId v) { return to_fraction_string(tree.label(v)); });
    case CodeMode::Unlabeled:
      return codes_bottom_up(tree, [](NodeId) { return std::string(); });
    case CodeMode::RankLabeled: {
      std::vector<Rational> labels;
      for (NodeId v = 0; v < tree.node_count(); ++v) labels.push_back(tree.label(v));
      std::sort(labels.begin(), labels.end());
      labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
      return codes_bottom_up(tree, [&](NodeId v) {
        auto rank = std::lower_bound(labels.begin(), labels.end(), tree.label(v)) - labels.begin();
        return "r" + std::to_string(rank);
      });
    }
  }
  return {};
}

CanonCode canonical_code(const RootedTree& tree, CodeMode mode) {
  return CanonCode{std::move(node_codes(tree, mode).front())};
}

std::string code_with_tokens(const RootedTree& tree, std::span<const std::string> tokens) {
  static const std::string zero = to_fraction_string(Rational(0));
  return std::move(codes_bottom_up(tree, [&](NodeId v) -> const std::string& {
                     return tree.is_leaf(v) ? zero : tokens[v];
                   }).front());
}

bool are_isometric(const Space& x, const Space& y) {
  if (x.size() != y.size() || x.spectrum() != y.spectrum()) return false;
  return canonical_code(build_representing_tree(x), CodeMode::Labeled) ==
         canonical_code(build_representing_tree(y), CodeMode::Labeled);
}

std::optional<Scaling> are_weakly_similar(const Space& x, const Space& y) {
  if (x.size() != y.size() || x.spectrum().size() != y.spectrum().size()) return std::nullopt;
  if (canonical_code(build_representing_tree(x), CodeMode::RankLabeled) !=
      canonical_code(build_representing_tree(y), CodeMode::RankLabeled))
    return std::nullopt;
  Scaling s;
  for (std::size_t i = 0; i < x.spectrum().size(); ++i) s.pairs.emplace_back(x.spectrum()[i], y.spectrum()[i]);
  return s;
}

BigInt count_self_isometries(const RootedTree& tree) {
  const auto codes = node_codes(tree, CodeMode::Labeled);
  BigInt total = 1;
  for (NodeId v : tree.internal_nodes()) {
    std::map<std::string_view, unsigned> groups;
    for (NodeId c : tree.children(v)) ++groups[codes[c]];
    for (const auto& [code, m] : groups)
      for (unsigned k = 2; k <= m; ++k) total *= k;
  }
  return total;
}

}  // namespace ultraforest
