#include "tgc/expr.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace tgc {

Vec uniform_vec(const std::string& name, int rank) { return Vec(rank, name); }

Expr::Expr() : node_(std::make_shared<const Node>()) {}
Expr::Expr(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

Expr scalar(const Rational& v) {
  Node n;
  n.kind = Kind::Scalar;
  n.value = v;
  return Expr(std::move(n));
}

Expr scalar(long num, long den) { return scalar(make_rational(num, den)); }

Expr lambda_power(int p) {
  Node n;
  n.kind = Kind::Lambda;
  n.power = p;
  return Expr(std::move(n));
}

std::vector<Block> make_blocks(const std::vector<ColoredGraph>& word, const std::vector<Vec>& args) {
  std::vector<Block> out;
  std::size_t off = 0;
  for (const auto& g : word) {
    if (g.empty() || !is_connected(g)) throw ExprError("word factors must be connected and non-empty");
    Labeling l = canonical_labeling(g);
    Block b{connected_code(g), std::vector<Vec>(g.k())};
    for (int w = 0; w < g.k(); ++w) {
      if (off + w >= args.size()) throw ExprError("too few arguments for the word");
      if (static_cast<int>(args[off + w].size()) != g.rank()) throw ExprError("argument rank mismatch");
      b.args[l.white[w]] = args[off + w];
    }
    off += g.k();
    out.push_back(std::move(b));
  }
  if (off != args.size()) throw ExprError("too many arguments for the word");
  return out;
}

Expr correlator_blocks(std::vector<Block> blocks) {
  if (blocks.empty()) throw ExprError("correlator of the empty graph");
  Node n;
  n.kind = Kind::Correlator;
  n.blocks = std::move(blocks);
  return Expr(std::move(n));
}

Expr correlator(const std::vector<ColoredGraph>& word, const std::vector<Vec>& args) {
  return correlator_blocks(make_blocks(word, args));
}

Expr correlator(const ColoredGraph& g, const std::vector<Vec>& args) {
  std::vector<ColoredGraph> word;
  std::vector<Vec> flat;
  for (const auto& comp : components(g)) {
    word.push_back(comp.graph);
    for (int w : comp.whites) flat.push_back(args.at(w));
  }
  return correlator(word, flat);
}

Expr fcoeff_blocks(int colour, const std::string& s, std::vector<Block> blocks) {
  Node n;
  n.kind = Kind::FCoeff;
  n.colour = colour;
  n.name = s;
  n.blocks = std::move(blocks);
  return Expr(std::move(n));
}

Expr fcoeff(int colour, const std::string& s, const std::vector<ColoredGraph>& word, const std::vector<Vec>& args) {
  return fcoeff_blocks(colour, s, make_blocks(word, args));
}

Expr prop_inv(const Vec& v) {
  Node n;
  n.kind = Kind::PropInv;
  n.vec = v;
  return Expr(std::move(n));
}

Expr prop_diff_inv(int colour, const std::string& a, const std::string& b) {
  if (a == b) throw ExprError("1/E(a,a) is outside the domain");
  Node n;
  n.kind = Kind::PropDiffInv;
  n.colour = colour;
  n.a = a;
  n.b = b;
  return Expr(std::move(n));
}

Expr index_sum(const std::string& bound, int colour, const Expr& body) {
  Node n;
  n.kind = Kind::IndexSum;
  n.name = bound;
  n.colour = colour;
  n.children = {body};
  return Expr(std::move(n));
}

Expr sum(std::vector<Expr> terms) {
  Node n;
  n.kind = Kind::Sum;
  n.children = std::move(terms);
  return Expr(std::move(n));
}

Expr product(std::vector<Expr> factors) {
  Node n;
  n.kind = Kind::Product;
  n.children = std::move(factors);
  return Expr(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
Expr operator-(const Expr& a) { return product({scalar(-1), a}); }

namespace {

using Renaming = std::map<Atom, std::string>;

std::string lookup(const Renaming& r, const std::string& name, int colour) {
  auto it = r.find(Atom{name, colour});
  return it == r.end() ? name : it->second;
}

Vec rename_vec(const Vec& v, const Renaming& r) {
  Vec out(v.size());
  for (std::size_t c = 0; c < v.size(); ++c) out[c] = lookup(r, v[c], static_cast<int>(c) + 1);
  return out;
}

std::vector<Block> rename_blocks(const std::vector<Block>& blocks, const Renaming& r) {
  std::vector<Block> out = blocks;
  for (auto& b : out)
    for (auto& a : b.args) a = rename_vec(a, r);
  return out;
}

// Leaf with every atom mapped through r.
Expr rename_leaf(const Expr& e, const Renaming& r) {
  if (r.empty()) return e;
  Node n = e.node();
  switch (n.kind) {
    case Kind::Correlator:
      n.blocks = rename_blocks(n.blocks, r);
      break;
    case Kind::FCoeff:
      n.blocks = rename_blocks(n.blocks, r);
      n.name = lookup(r, n.name, n.colour);
      break;
    case Kind::PropInv:
      n.vec = rename_vec(n.vec, r);
      break;
    case Kind::PropDiffInv:
      n.a = lookup(r, n.a, n.colour);
      n.b = lookup(r, n.b, n.colour);
      break;
    default:
      break;
  }
  return Expr(std::move(n));
}

void leaf_atoms(const Expr& e, std::vector<Atom>& out) {
  const Node& n = e.node();
  auto vec_atoms = [&](const Vec& v) {
    for (std::size_t c = 0; c < v.size(); ++c) out.push_back({v[c], static_cast<int>(c) + 1});
  };
  switch (n.kind) {
    case Kind::Correlator:
    case Kind::FCoeff:
      for (const auto& b : n.blocks)
        for (const auto& a : b.args) vec_atoms(a);
      if (n.kind == Kind::FCoeff) out.push_back({n.name, n.colour});
      break;
    case Kind::PropInv:
      vec_atoms(n.vec);
      break;
    case Kind::PropDiffInv:
      out.push_back({n.a, n.colour});
      out.push_back({n.b, n.colour});
      break;
    default:
      break;
  }
}

void collect_free(const Expr& e, std::set<Atom>& bound, std::vector<Atom>& out) {
  const Node& n = e.node();
  switch (n.kind) {
    case Kind::IndexSum: {
      Atom b{n.name, n.colour};
      bool fresh = bound.insert(b).second;
      collect_free(n.children[0], bound, out);
      if (fresh) bound.erase(b);
      break;
    }
    case Kind::Sum:
    case Kind::Product:
      for (const auto& c : n.children) collect_free(c, bound, out);
      break;
    default: {
      std::vector<Atom> atoms;
      leaf_atoms(e, atoms);
      for (auto& a : atoms)
        if (!bound.count(a)) out.push_back(a);
    }
  }
}

bool mentions(const Expr& e, const Atom& a) {
  auto fa = free_atoms(e);
  return std::find(fa.begin(), fa.end(), a) != fa.end();
}

std::string fresh_like(const std::string& base, int colour, const Expr& body, const Atom& avoid) {
  auto fa = free_atoms(body);
  for (int i = 1;; ++i) {
    Atom cand{base + std::to_string(i), colour};
    if (cand == avoid) continue;
    if (std::find(fa.begin(), fa.end(), cand) == fa.end()) return cand.name;
  }
}

Expr subst_rec(const Expr& e, const Atom& target, const std::string& repl) {
  const Node& n = e.node();
  switch (n.kind) {
    case Kind::Scalar:
    case Kind::Lambda:
      return e;
    case Kind::IndexSum: {
      Atom b{n.name, n.colour};
      if (b == target) return e;
      Expr body = n.children[0];
      std::string bname = n.name;
      if (b.colour == target.colour && b.name == repl && mentions(body, target)) {
        bname = fresh_like(n.name, n.colour, body, target);
        body = subst_rec(body, b, bname);
      }
      return index_sum(bname, n.colour, subst_rec(body, target, repl));
    }
    case Kind::Sum:
    case Kind::Product: {
      Node m = n;
      for (auto& c : m.children) c = subst_rec(c, target, repl);
      return Expr(std::move(m));
    }
    default:
      return rename_leaf(e, Renaming{{target, repl}});
  }
}

void check_not_bound(const Expr& e, const Atom& target) {
  const Node& n = e.node();
  if (n.kind == Kind::IndexSum && Atom{n.name, n.colour} == target)
    throw ExprError("cannot substitute the bound symbol " + target.name + "_" + std::to_string(target.colour));
  for (const auto& c : n.children) check_not_bound(c, target);
}

// ---- normalization ----

struct RawMonomial {
  Rational coeff{1};
  int lambda = 0;
  std::vector<Atom> binders;
  std::vector<Expr> leaves;
};

struct Expander {
  int counter = 0;

  std::vector<RawMonomial> run(const Expr& e, const Renaming& env) {
    const Node& n = e.node();
    switch (n.kind) {
      case Kind::Scalar: {
        RawMonomial m;
        m.coeff = n.value;
        return {m};
      }
      case Kind::Lambda: {
        RawMonomial m;
        m.lambda = n.power;
        return {m};
      }
      case Kind::Sum: {
        std::vector<RawMonomial> out;
        for (const auto& c : n.children) {
          auto part = run(c, env);
          out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        return out;
      }
      case Kind::Product: {
        std::vector<RawMonomial> acc(1);
        for (const auto& c : n.children) {
          auto part = run(c, env);
          std::vector<RawMonomial> next;
          for (const auto& a : acc)
            for (const auto& b : part) {
              RawMonomial m;
              m.coeff = a.coeff * b.coeff;
              if (m.coeff == 0) continue;
              m.lambda = a.lambda + b.lambda;
              m.binders = a.binders;
              m.binders.insert(m.binders.end(), b.binders.begin(), b.binders.end());
              m.leaves = a.leaves;
              m.leaves.insert(m.leaves.end(), b.leaves.begin(), b.leaves.end());
              next.push_back(std::move(m));
            }
          acc = std::move(next);
        }
        return acc;
      }
      case Kind::IndexSum: {
        Renaming inner = env;
        std::string fresh = "%" + std::to_string(counter++);
        inner[Atom{n.name, n.colour}] = fresh;
        auto body = run(n.children[0], inner);
        for (auto& m : body) m.binders.insert(m.binders.begin(), Atom{fresh, n.colour});
        return body;
      }
      default: {
        RawMonomial m;
        m.leaves.push_back(rename_leaf(e, env));
        return {m};
      }
    }
  }
};

const std::vector<Perm>& aut_whites(const CanonicalCode& code) {
  static std::mutex mu;
  static std::map<CanonicalCode, std::vector<Perm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(code);
  if (it != cache.end()) return it->second;
  std::vector<Perm> perms;
  for (const auto& a : automorphism_group(graph_from_connected_code(code))) perms.push_back(a.white);
  return cache.emplace(code, std::move(perms)).first->second;
}

std::string vec_key(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += v[i];
  }
  return s;
}

std::string blocks_key(const std::vector<Block>& blocks) {
  std::string s;
  for (const auto& b : blocks) {
    s += code_hex(b.code) + "(";
    for (std::size_t i = 0; i < b.args.size(); ++i) {
      if (i) s += ';';
      s += vec_key(b.args[i]);
    }
    s += ")";
  }
  return s;
}

Block minimize_block(const Block& b) {
  Block best = b;
  for (const auto& p : aut_whites(b.code)) {
    std::vector<Vec> moved(b.args.size());
    for (std::size_t j = 0; j < b.args.size(); ++j) moved[p[j]] = b.args[j];
    if (moved < best.args) best.args = std::move(moved);
  }
  return best;
}

// Canonical leaf and the sign it contributes.
std::pair<Expr, int> canonical_leaf(const Expr& e) {
  Node n = e.node();
  int sign = 1;
  switch (n.kind) {
    case Kind::Correlator:
      for (auto& b : n.blocks) b = minimize_block(b);
      std::sort(n.blocks.begin(), n.blocks.end(), [](const Block& x, const Block& y) {
        return x.code != y.code ? x.code < y.code : x.args < y.args;
      });
      break;
    case Kind::FCoeff:
      std::stable_sort(n.blocks.begin(), n.blocks.end(),
                       [](const Block& x, const Block& y) { return x.code < y.code; });
      break;
    case Kind::PropDiffInv:
      if (n.a == n.b) throw ExprError("1/E(a,a) is outside the domain");
      if (n.b < n.a) {
        std::swap(n.a, n.b);
        sign = -1;
      }
      break;
    default:
      break;
  }
  return {Expr(std::move(n)), sign};
}

std::string leaf_key(const Expr& e) {
  const Node& n = e.node();
  switch (n.kind) {
    case Kind::Correlator:
      return "1G{" + blocks_key(n.blocks) + "}";
    case Kind::FCoeff:
      return "2F" + std::to_string(n.colour) + "{" + n.name + ";" + blocks_key(n.blocks) + "}";
    case Kind::PropInv:
      return "3P[" + vec_key(n.vec) + "]";
    case Kind::PropDiffInv:
      return "4D" + std::to_string(n.colour) + "(" + n.a + "," + n.b + ")";
    default:
      throw ExprError("not a leaf");
  }
}

bool is_reserved_bound_name(const std::string& s) {
  if (s.size() < 2 || s[0] != 'q') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

Monomial canonical_monomial(const RawMonomial& raw) {
  std::map<int, std::vector<std::string>> by_colour;
  for (const auto& b : raw.binders) by_colour[b.colour].push_back(b.name);
  {
    std::set<Atom> bound(raw.binders.begin(), raw.binders.end());
    std::vector<Atom> atoms;
    for (const auto& l : raw.leaves) leaf_atoms(l, atoms);
    for (const auto& a : atoms)
      if (!bound.count(a) && is_reserved_bound_name(a.name))
        throw ExprError("free symbol '" + a.name + "' uses a name reserved for bound indices");
  }
  std::vector<std::pair<int, std::vector<std::string>>> groups(by_colour.begin(), by_colour.end());
  for (auto& g : groups) std::sort(g.second.begin(), g.second.end());

  Monomial best;
  bool have = false;
  // Odometer over the permutations of each colour group.
  while (true) {
    Renaming r;
    for (const auto& [colour, names] : groups)
      for (std::size_t i = 0; i < names.size(); ++i) r[Atom{names[i], colour}] = "q" + std::to_string(i);
    int sign = 1;
    std::vector<std::pair<std::string, Expr>> keyed;
    for (const auto& l : raw.leaves) {
      auto [cl, s] = canonical_leaf(rename_leaf(l, r));
      sign *= s;
      keyed.emplace_back(leaf_key(cl), cl);
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string key = "L" + std::to_string(raw.lambda) + "|B";
    for (const auto& [colour, names] : groups) key += std::to_string(colour) + "x" + std::to_string(names.size()) + ",";
    for (const auto& kv : keyed) key += "|" + kv.first;
    if (!have || key < best.key) {
      have = true;
      best.key = key;
      best.coeff = raw.coeff * sign;
      best.lambda = raw.lambda;
      best.binders.clear();
      for (const auto& [colour, names] : groups)
        for (std::size_t i = 0; i < names.size(); ++i) best.binders.push_back({"q" + std::to_string(i), colour});
      best.leaves.clear();
      for (auto& kv : keyed) best.leaves.push_back(kv.second);
    }
    std::size_t gi = 0;
    for (; gi < groups.size(); ++gi)
      if (std::next_permutation(groups[gi].second.begin(), groups[gi].second.end())) break;
    if (gi == groups.size()) break;
  }
  return best;
}

}  // namespace

Expr to_expr(const Monomial& m) {
  std::vector<Expr> factors;
  if (m.coeff != 1 || (m.lambda == 0 && m.leaves.empty())) factors.push_back(scalar(m.coeff));
  if (m.lambda != 0) factors.push_back(lambda_power(m.lambda));
  factors.insert(factors.end(), m.leaves.begin(), m.leaves.end());
  Expr body = factors.size() == 1 ? factors[0] : product(factors);
  for (auto it = m.binders.rbegin(); it != m.binders.rend(); ++it) body = index_sum(it->name, it->colour, body);
  return body;
}

namespace {

Expr rename_rec(const Expr& e, const Renaming& r) {
  const Node& n = e.node();
  switch (n.kind) {
    case Kind::Scalar:
    case Kind::Lambda:
      return e;
    case Kind::IndexSum: {
      Atom b{n.name, n.colour};
      Renaming inner = r;
      inner.erase(b);
      Expr body = n.children[0];
      std::string bname = n.name;
      bool captures = false;
      for (const auto& [from, to] : inner)
        if (from.colour == b.colour && to == b.name && mentions(body, from)) captures = true;
      if (captures) {
        for (int i = 1;; ++i) {
          std::string cand = n.name + std::to_string(i);
          bool clash = mentions(body, Atom{cand, n.colour});
          for (const auto& [from, to] : inner)
            if (from.colour == b.colour && to == cand) clash = true;
          if (!clash) {
            bname = cand;
            break;
          }
        }
        body = rename_rec(body, Renaming{{b, bname}});
      }
      return index_sum(bname, n.colour, rename_rec(body, inner));
    }
    case Kind::Sum:
    case Kind::Product: {
      Node m = n;
      for (auto& c : m.children) c = rename_rec(c, r);
      return Expr(std::move(m));
    }
    default:
      return rename_leaf(e, r);
  }
}

}  // namespace

Expr rename_atoms(const Expr& e, const std::map<Atom, std::string>& r) { return rename_rec(e, r); }

Expr rename_symbols(const Expr& e, const std::map<std::string, std::string>& r, int rank) {
  Renaming full;
  for (const auto& [from, to] : r)
    for (int c = 1; c <= rank; ++c) full[Atom{from, c}] = to;
  return rename_rec(e, full);
}

Expr substitute(const Expr& e, const Atom& target, const std::string& replacement) {
  check_not_bound(e, target);
  return subst_rec(e, target, replacement);
}

std::vector<Atom> free_atoms(const Expr& e) {
  std::set<Atom> bound;
  std::vector<Atom> out;
  collect_free(e, bound, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials(const Expr& e) {
  Expander ex;
  auto raw = ex.run(e, {});
  std::map<std::string, Monomial> combined;
  for (const auto& r : raw) {
    if (r.coeff == 0) continue;
    Monomial m = canonical_monomial(r);
    auto it = combined.find(m.key);
    if (it == combined.end())
      combined.emplace(m.key, std::move(m));
    else
      it->second.coeff += m.coeff;
  }
  std::vector<Monomial> out;
  for (auto& [k, m] : combined)
    if (m.coeff != 0) out.push_back(std::move(m));
  return out;
}

Expr normalize(const Expr& e) {
  auto ms = monomials(e);
  if (ms.empty()) return scalar(0);
  if (ms.size() == 1) return to_expr(ms[0]);
  std::vector<Expr> terms;
  for (const auto& m : ms) terms.push_back(to_expr(m));
  return sum(std::move(terms));
}

std::string canonical_key(const Expr& e) {
  std::string s;
  for (const auto& m : monomials(e)) s += m.coeff.get_str() + "*" + m.key + "\n";
  return s;
}

bool equal_normalized(const Expr& a, const Expr& b) { return canonical_key(a) == canonical_key(b); }

bool is_zero(const Expr& e) { return monomials(e).empty(); }

}  // namespace tgc
