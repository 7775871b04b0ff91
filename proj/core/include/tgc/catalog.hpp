#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tgc/colored_graph.hpp"

namespace tgc {

// A connected graph with a fixed labeling; the labeling fixes the argument order of named correlators.
struct CatalogEntry {
  std::string name;
  ColoredGraph graph;
  CanonicalCode code;
  std::string construction;
};

// Rank-3 names: m, V1..V3, K33, Q1..Q3, Fa;bc. Other ranks: m only.
const std::vector<CatalogEntry>& catalog(int rank);
const CatalogEntry* find_entry(int rank, const std::string& name);
// Preferred display entry of an isomorphism class, if any.
const CatalogEntry* entry_for_code(const CanonicalCode& connected);
std::vector<std::string> aliases(const CanonicalCode& connected);

// "m|V1|K33" -> labeled components; "" or "0" -> empty word. Components may also be "#<hex code>".
std::vector<ColoredGraph> parse_word(const std::string& spec, int rank = 3);
// Display name of a connected graph class (catalog name or "#hex").
std::string class_name(const ColoredGraph& connected);

}  // namespace tgc
