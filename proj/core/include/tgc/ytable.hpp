#pragma once

#include <map>
#include <string>
#include <vector>

#include "tgc/expr.hpp"

namespace tgc {

struct YEntry {
  int colour = 1;
  std::vector<ColoredGraph> word;    // labeled as the catalog names in the source line
  std::vector<std::string> formals;  // one symbol per white of word
  Expr body;                         // free atoms: formals in any colour, s in `colour`
  std::string source;                // instantiated head, for diagnostics
};

struct YTable {
  int version = 0;
  std::vector<YEntry> entries;
  std::map<std::string, std::size_t> index;

  const YEntry* find(int colour, const std::vector<Block>& blocks) const;
};

YTable parse_ytable(const std::string& text);
YTable load_ytable(const std::string& path);
// data/ytable.txt, loaded once.
const YTable& default_ytable();

// Replaces every f^(c)_{B,s} by its table expansion; throws ExprError for a missing entry.
Expr y_expand(const Expr& e, const YTable& table = default_ytable());

}  // namespace tgc
