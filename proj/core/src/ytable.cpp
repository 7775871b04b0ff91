#include "tgc/ytable.hpp"

#include <algorithm>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>

#include "tgc/catalog.hpp"
#include "tgc/data.hpp"

namespace tgc {

namespace {

std::vector<Block> sorted_blocks(std::vector<Block> b) {
  std::stable_sort(b.begin(), b.end(), [](const Block& x, const Block& y) { return x.code < y.code; });
  return b;
}

std::string entry_key(int colour, const std::vector<Block>& blocks) {
  std::string k = std::to_string(colour) + "|";
  for (const auto& b : sorted_blocks(blocks)) k += code_hex(b.code) + ".";
  return k;
}

std::string substitute_colours(std::string s, int a, int b, int c) {
  const std::pair<std::string, int> reps[] = {{"{a}", a}, {"{b}", b}, {"{c}", c}};
  for (const auto& [from, to] : reps) {
    std::size_t p = 0;
    while ((p = s.find(from, p)) != std::string::npos) s.replace(p, from.size(), std::to_string(to));
  }
  return s;
}

std::vector<std::string> split_formals(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

const YEntry* YTable::find(int colour, const std::vector<Block>& blocks) const {
  auto it = index.find(entry_key(colour, blocks));
  return it == index.end() ? nullptr : &entries[it->second];
}

YTable parse_ytable(const std::string& text) {
  // Join continuation lines into logical entries.
  std::vector<std::string> logical;
  std::stringstream in(text);
  std::string line;
  YTable table;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("version", 0) == 0) {
      table.version = std::stoi(line.substr(7));
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(line[0]))) {
      if (logical.empty()) throw ExprError("Y-table continuation without an entry");
      logical.back() += " " + line;
    } else {
      logical.push_back(line);
    }
  }
  if (table.version != 1) throw ExprError("unsupported Y-table version");

  static const std::regex head(R"(^\s*f\{a\}\[([^\]]*)\]\s*\(([^)]*)\)\s*=\s*([\s\S]*)$)");
  for (const auto& entry : logical) {
    std::smatch m;
    if (!std::regex_match(entry, m, head)) throw ExprError("malformed Y-table entry: " + entry);
    int perm[3] = {1, 2, 3};
    do {
      const int a = perm[0], b = perm[1], c = perm[2];
      YEntry y;
      y.colour = a;
      y.word = parse_word(substitute_colours(m[1].str(), a, b, c), 3);
      y.formals = split_formals(m[2].str());
      int k = 0;
      for (const auto& g : y.word) k += g.k();
      if (k != static_cast<int>(y.formals.size())) throw ExprError("Y-table formal count mismatch: " + entry);
      std::vector<Vec> formal_vecs;
      for (const auto& f : y.formals) formal_vecs.push_back(uniform_vec(f, 3));
      std::string key = entry_key(a, make_blocks(y.word, formal_vecs));
      if (table.index.count(key)) continue;
      y.body = parse_text(substitute_colours(m[3].str(), a, b, c), 3);
      std::set<std::string> allowed(y.formals.begin(), y.formals.end());
      for (const auto& at : free_atoms(y.body)) {
        bool ok = allowed.count(at.name) || (at.name == "s" && at.colour == a);
        if (!ok) throw ExprError("Y-table entry uses unknown symbol " + at.name + ": " + entry);
      }
      y.source = "f" + std::to_string(a) + "[" + substitute_colours(m[1].str(), a, b, c) + "]";
      table.index.emplace(key, table.entries.size());
      table.entries.push_back(std::move(y));
    } while (std::next_permutation(perm, perm + 3));
  }
  return table;
}

YTable load_ytable(const std::string& path) { return parse_ytable(read_file(path)); }

const YTable& default_ytable() {
  static YTable table;
  static std::once_flag once;
  std::call_once(once, [] { table = load_ytable(data_path("ytable.txt")); });
  return table;
}

Expr y_expand(const Expr& e, const YTable& table) {
  const Node& n = e.node();
  switch (n.kind) {
    case Kind::FCoeff: {
      const YEntry* y = table.find(n.colour, n.blocks);
      if (!y) throw ExprError("no Y-table entry for f" + std::to_string(n.colour) + " of this word (order truncation)");
      std::vector<Vec> formal_vecs;
      for (const auto& f : y->formals) formal_vecs.push_back(uniform_vec(f, 3));
      auto formal = sorted_blocks(make_blocks(y->word, formal_vecs));
      auto actual = sorted_blocks(n.blocks);
      std::map<Atom, std::string> ren;
      for (std::size_t i = 0; i < formal.size(); ++i)
        for (std::size_t j = 0; j < formal[i].args.size(); ++j)
          for (int c = 1; c <= 3; ++c) ren[Atom{formal[i].args[j][0], c}] = actual[i].args[j][c - 1];
      ren[Atom{"s", n.colour}] = n.name;
      return rename_atoms(y->body, ren);
    }
    case Kind::IndexSum:
      return index_sum(n.name, n.colour, y_expand(n.children[0], table));
    case Kind::Sum:
    case Kind::Product: {
      Node m = n;
      for (auto& c : m.children) c = y_expand(c, table);
      return Expr(std::move(m));
    }
    default:
      return e;
  }
}

}  // namespace tgc
