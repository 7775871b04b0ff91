#include "tgc/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace tgc {

namespace {

Perm id2() { return {0, 1}; }
Perm sw2() { return {1, 0}; }

ColoredGraph pillow(int a) {
  std::vector<Perm> perms(3, sw2());
  perms[a - 1] = id2();
  return make_graph(3, perms);
}

// Swap on m|V_p between the melon black and the second pillow black.
ColoredGraph melon_pillow_swap(int colour, int p) {
  return edge_swap(disjoint_union(melon(3), pillow(p)), colour, 0, 2);
}

std::vector<CatalogEntry> build_rank3() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, ColoredGraph g, std::string how) {
    CanonicalCode code = connected_code(g);
    out.push_back({std::move(name), std::move(g), std::move(code), std::move(how)});
  };
  add("m", melon(3), "[id1,id1,id1]");
  for (int a = 1; a <= 3; ++a) add("V" + std::to_string(a), pillow(a), "colour " + std::to_string(a) + " parallel");
  add("K33", make_graph(3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}), "[id3,(123),(132)]");
  for (int a = 1; a <= 3; ++a)
    add("Q" + std::to_string(a), melon_pillow_swap(a, a),
        "swap_" + std::to_string(a) + "(m|V" + std::to_string(a) + ";1,3)");
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        if (a == b || b == c || a == c) continue;
        add("F" + std::to_string(a) + ";" + std::to_string(b) + std::to_string(c), melon_pillow_swap(b, c),
            "swap_" + std::to_string(b) + "(m|V" + std::to_string(c) + ";1,3)");
      }
  return out;
}

struct Registry {
  std::map<int, std::vector<CatalogEntry>> by_rank;
  std::map<CanonicalCode, std::vector<const CatalogEntry*>> by_code;
};

Registry& registry() {
  static Registry reg;
  static std::once_flag once;
  std::call_once(once, [] {
    reg.by_rank[3] = build_rank3();
    for (int r : {1, 2, 4, 5, 6}) {
      ColoredGraph m = melon(r);
      reg.by_rank[r].push_back({"m", m, connected_code(m), "melon"});
    }
    for (auto& [rank, entries] : reg.by_rank)
      for (auto& e : entries) reg.by_code[e.code].push_back(&e);
    for (auto& [code, list] : reg.by_code)
      std::stable_sort(list.begin(), list.end(),
                       [](const CatalogEntry* a, const CatalogEntry* b) { return a->name < b->name; });
  });
  return reg;
}

}  // namespace

const std::vector<CatalogEntry>& catalog(int rank) {
  auto& reg = registry();
  auto it = reg.by_rank.find(rank);
  if (it == reg.by_rank.end()) {
    static const std::vector<CatalogEntry> none;
    return none;
  }
  return it->second;
}

const CatalogEntry* find_entry(int rank, const std::string& name) {
  for (const auto& e : catalog(rank))
    if (e.name == name) return &e;
  return nullptr;
}

const CatalogEntry* entry_for_code(const CanonicalCode& connected) {
  auto& reg = registry();
  auto it = reg.by_code.find(connected);
  if (it == reg.by_code.end() || it->second.empty()) return nullptr;
  return it->second.front();
}

std::vector<std::string> aliases(const CanonicalCode& connected) {
  std::vector<std::string> out;
  auto& reg = registry();
  auto it = reg.by_code.find(connected);
  if (it != reg.by_code.end())
    for (const auto* e : it->second) out.push_back(e->name);
  return out;
}

std::vector<ColoredGraph> parse_word(const std::string& spec, int rank) {
  std::vector<ColoredGraph> out;
  if (spec.empty() || spec == "0" || spec == "empty") return out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t bar = spec.find('|', start);
    std::string name = spec.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    if (name.empty()) throw GraphError("empty component name in word '" + spec + "'");
    if (name[0] == '#') {
      ColoredGraph g = graph_from_connected_code(code_from_hex(name.substr(1)));
      if (g.rank() != rank) throw GraphError("component '" + name + "' has the wrong rank");
      out.push_back(g);
    } else {
      const CatalogEntry* e = find_entry(rank, name);
      if (!e) throw GraphError("unknown graph name '" + name + "' for rank " + std::to_string(rank));
      out.push_back(e->graph);
    }
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

std::string class_name(const ColoredGraph& connected) {
  CanonicalCode code = connected_code(connected);
  if (const CatalogEntry* e = entry_for_code(code)) return e->name;
  return "#" + code_hex(code);
}

}  // namespace tgc
