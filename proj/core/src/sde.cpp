#include "tgc/sde.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tgc/catalog.hpp"
#include "tgc/graph_algebra.hpp"

namespace tgc {

std::string frame_symbol(int i) {
  static const char* base[] = {"x", "y", "z", "u", "v", "w", "t", "r", "p", "o", "n", "l", "k", "j", "h", "g"};
  constexpr int n = sizeof(base) / sizeof(base[0]);
  if (i < n) return base[i];
  return std::string(base[i % n]) + std::to_string(i / n);
}

Frame momentum_frame(const std::vector<ColoredGraph>& word) {
  if (word.empty()) throw GraphError("momentum frame of the empty word");
  const int rank = word.front().rank();
  Frame f;
  f.word = word;
  f.full = disjoint_union(word, rank);
  int off = 0;
  for (const auto& g : word) {
    if (g.rank() != rank) throw GraphError("rank mismatch in word");
    f.white_offset.push_back(off);
    off += g.k();
  }
  for (int w = 0; w < f.full.k(); ++w) {
    f.names.push_back(frame_symbol(w));
    f.whites.push_back(uniform_vec(f.names.back(), rank));
  }
  auto slots = induced_map(f.full);
  for (const auto& alpha : slots) {
    Vec y(rank);
    for (int c = 0; c < rank; ++c) y[c] = f.names[alpha[c]];
    f.blacks.push_back(y);
  }
  return f;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> factorizations(int degree) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (int mask = 0; mask < (1 << degree); ++mask) {
    std::vector<int> c, b;
    for (int i = 0; i < degree; ++i) ((mask >> i) & 1 ? c : b).push_back(i);
    out.emplace_back(std::move(c), std::move(b));
  }
  return out;
}

namespace {

struct Context {
  Frame frame;
  int rank = 0;
  int comp = 0;
  int beta_local = 0;
  int beta = 0;                // global black
  std::vector<int> q_comps;    // word positions of the remainder
  std::vector<std::string> s;  // s_c names, index c-1
};

Context make_context(const std::vector<ColoredGraph>& word, BetaChoice bc) {
  Context ctx;
  ctx.frame = momentum_frame(word);
  ctx.rank = word.front().rank();
  if (bc.component < 0 || bc.component >= static_cast<int>(word.size()))
    throw GraphError("component index out of range");
  if (bc.black < 0 || bc.black >= word[bc.component].k()) throw GraphError("black vertex out of range");
  for (const auto& g : word)
    if (g.empty() || !is_connected(g)) throw GraphError("word components must be connected and non-empty");
  ctx.comp = bc.component;
  ctx.beta_local = bc.black;
  ctx.beta = ctx.frame.white_offset[bc.component] + bc.black;
  for (int i = 0; i < static_cast<int>(word.size()); ++i)
    if (i != bc.component) ctx.q_comps.push_back(i);
  for (int c = 1; c <= ctx.rank; ++c) ctx.s.push_back(ctx.frame.names[ctx.frame.full.white_of(c, ctx.beta)]);
  return ctx;
}

std::vector<Vec> component_args(const Context& ctx, int comp) {
  const int off = ctx.frame.white_offset[comp];
  return {ctx.frame.whites.begin() + off, ctx.frame.whites.begin() + off + ctx.frame.word[comp].k()};
}

// Momenta of the components at the given word positions, concatenated.
std::vector<Vec> args_of(const Context& ctx, const std::vector<int>& comps) {
  std::vector<Vec> out;
  for (int i : comps) {
    auto a = component_args(ctx, i);
    out.insert(out.end(), a.begin(), a.end());
  }
  return out;
}

std::vector<ColoredGraph> graphs_of(const Context& ctx, const std::vector<int>& comps) {
  std::vector<ColoredGraph> out;
  for (int i : comps) out.push_back(ctx.frame.word[i]);
  return out;
}

// Momenta after a word-group element: the block at position j receives column perm image.
std::vector<Vec> act_on_args(const GraphWord& w, const WordGroupElement& e, const std::vector<Vec>& args) {
  Perm p = white_map(w, e);
  std::vector<Vec> out(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) out[p[i]] = args[i];
  return out;
}

Expr difference_over(const Context& ctx, int c, const std::string& t, const Expr& f) {
  const std::string& s = ctx.s[c - 1];
  return prop_diff_inv(c, t, s) * (f - substitute(f, Atom{s, c}, t));
}

Expr family_f_orbit(const Context& ctx, int c) {
  GraphWord w(ctx.rank, ctx.frame.word);
  std::vector<Expr> terms;
  for (const auto& e : word_group(w))
    terms.push_back(fcoeff(c, ctx.s[c - 1], ctx.frame.word, act_on_args(w, e, ctx.frame.whites)));
  return sum(std::move(terms));
}

Expr family_swap(const Context& ctx, int c) {
  std::vector<Expr> terms;
  for (int rho = 0; rho < ctx.frame.full.k(); ++rho) {
    if (rho == ctx.beta) continue;
    ColoredGraph swapped = edge_swap(ctx.frame.full, c, ctx.beta, rho);
    Expr t = correlator(swapped, ctx.frame.whites);
    terms.push_back(difference_over(ctx, c, ctx.frame.names[ctx.frame.full.white_of(c, rho)], t));
  }
  return sum(std::move(terms));
}

Expr family_tadpole(const Context& ctx, int c) {
  const std::string& s = ctx.s[c - 1];
  Expr g = correlator(ctx.frame.word, ctx.frame.whites);
  return -index_sum("b", c, prop_diff_inv(c, s, "b") * (g - substitute(g, Atom{s, c}, "b")));
}

Expr family_bridges(const Context& ctx, int c, const SdeOptions& opts) {
  const ColoredGraph& r = ctx.frame.word[ctx.comp];
  const int roff = ctx.frame.white_offset[ctx.comp];
  const auto rargs = component_args(ctx, ctx.comp);
  GraphWord qword(ctx.rank, graphs_of(ctx, ctx.q_comps));
  std::vector<Expr> terms;
  for (int tau : bridge_pairs(r, ctx.beta_local, c)) {
    auto parts = components(edge_swap(r, c, ctx.beta_local, tau));
    if (parts.size() != 2) throw GraphError("a 2-bridge swap must give two components");
    std::vector<Expr> hs;
    for (const auto& [cpos, bpos] : factorizations(static_cast<int>(ctx.q_comps.size()))) {
      std::vector<int> cc, bb;
      for (int i : cpos) cc.push_back(ctx.q_comps[i]);
      for (int i : bpos) bb.push_back(ctx.q_comps[i]);
      auto side = [&](const Component& part, const std::vector<int>& extra) {
        std::vector<ColoredGraph> w{part.graph};
        std::vector<Vec> a;
        for (int lw : part.whites) a.push_back(rargs[lw]);
        auto g = graphs_of(ctx, extra);
        auto x = args_of(ctx, extra);
        w.insert(w.end(), g.begin(), g.end());
        a.insert(a.end(), x.begin(), x.end());
        return correlator(w, a);
      };
      Expr h = side(parts[0], cc) * side(parts[1], bb);
      if (opts.convention == FactorizationConvention::Orbit) {
        hs.push_back(h);
        continue;
      }
      // Literal: orbit of the remainder's automorphisms on its momenta.
      auto qargs = args_of(ctx, ctx.q_comps);
      for (const auto& e : word_group(qword)) {
        auto moved = act_on_args(qword, e, qargs);
        std::map<std::string, std::string> ren;
        for (std::size_t i = 0; i < qargs.size(); ++i) ren[qargs[i][0]] = moved[i][0];
        hs.push_back(rename_symbols(h, ren, ctx.rank));
      }
    }
    std::string t = ctx.frame.names[r.white_of(c, tau) + roff];
    terms.push_back(difference_over(ctx, c, t, sum(std::move(hs))));
  }
  return sum(std::move(terms));
}

Expr family_insertions(const Context& ctx, int c, const SdeOptions& opts) {
  const ColoredGraph& r = ctx.frame.word[ctx.comp];
  const auto rargs = component_args(ctx, ctx.comp);
  GraphWord qword(ctx.rank, graphs_of(ctx, ctx.q_comps));
  const std::string& s = ctx.s[c - 1];
  std::vector<Expr> terms;
  for (const auto& [cpos, bpos] : factorizations(static_cast<int>(ctx.q_comps.size()))) {
    std::vector<int> cc, bb;
    for (int i : cpos) cc.push_back(ctx.q_comps[i]);
    for (int i : bpos) bb.push_back(ctx.q_comps[i]);
    std::vector<ColoredGraph> gw{r};
    auto bg = graphs_of(ctx, bb);
    gw.insert(gw.end(), bg.begin(), bg.end());
    std::vector<Vec> ga = rargs;
    auto bx = args_of(ctx, bb);
    ga.insert(ga.end(), bx.begin(), bx.end());
    Expr g = correlator(gw, ga);
    auto cgraphs = graphs_of(ctx, cc);
    auto cargs = args_of(ctx, cc);
    if (opts.convention == FactorizationConvention::Orbit) {
      GraphWord cword(ctx.rank, cgraphs);
      for (const auto& e : word_group(cword)) terms.push_back(fcoeff(c, s, cgraphs, act_on_args(cword, e, cargs)) * g);
      continue;
    }
    Rational weight = make_rational(1, static_cast<long>(word_group_order(GraphWord(ctx.rank, bg))));
    Expr base = scalar(weight) * fcoeff(c, s, cgraphs, cargs) * g;
    auto qargs = args_of(ctx, ctx.q_comps);
    for (const auto& e : word_group(qword)) {
      auto moved = act_on_args(qword, e, qargs);
      std::map<std::string, std::string> ren;
      for (std::size_t i = 0; i < qargs.size(); ++i) ren[qargs[i][0]] = moved[i][0];
      terms.push_back(rename_symbols(base, ren, ctx.rank));
    }
  }
  return sum(std::move(terms));
}

}  // namespace

std::vector<BetaChoice> inequivalent_beta_choices(const std::vector<ColoredGraph>& word) {
  Frame f = momentum_frame(word);
  auto group = automorphism_group(f.full);
  std::vector<BetaChoice> out;
  std::set<int> seen;
  for (int b = 0; b < f.full.k(); ++b) {
    if (seen.count(b)) continue;
    for (const auto& a : group) seen.insert(a.black[b]);
    int comp = static_cast<int>(std::upper_bound(f.white_offset.begin(), f.white_offset.end(), b) - f.white_offset.begin()) - 1;
    out.push_back({comp, b - f.white_offset[comp]});
  }
  return out;
}

Equation generate_sde(const std::vector<ColoredGraph>& word, BetaChoice beta, const SdeOptions& opts) {
  Context ctx = make_context(word, beta);
  std::vector<Expr> colours;
  for (int c = 1; c <= ctx.rank; ++c) {
    colours.push_back(sum({family_f_orbit(ctx, c), family_swap(ctx, c), family_tadpole(ctx, c),
                           family_bridges(ctx, c, opts), family_insertions(ctx, c, opts)}));
  }
  Expr rhs = product({scalar(-2), lambda_power(1), prop_inv(ctx.frame.blacks[ctx.beta]), sum(std::move(colours))});
  return {correlator(ctx.frame.word, ctx.frame.whites), rhs};
}

Expr resolve_swap_correlator(const std::vector<ColoredGraph>& word, BetaChoice beta, int c, int rho) {
  Context ctx = make_context(word, beta);
  if (c < 1 || c > ctx.rank) throw GraphError("colour out of range");
  if (rho < 0 || rho >= ctx.frame.full.k() || rho == ctx.beta) throw GraphError("invalid swap partner");
  return correlator(edge_swap(ctx.frame.full, c, ctx.beta, rho), ctx.frame.whites);
}

std::vector<ColoredGraph> connected_classes(int rank, int k) {
  if (k < 1) return {};
  if (k > 4) throw GraphError("enumeration bound exceeded (at most 8 vertices)");
  auto perms = all_perms(k);
  std::map<CanonicalCode, ColoredGraph> found;
  std::vector<std::size_t> idx(rank - 1, 0);
  while (true) {
    std::vector<Perm> tuple{identity_perm(k)};
    for (int i = 0; i < rank - 1; ++i) tuple.push_back(perms[idx[i]]);
    ColoredGraph g = make_graph(rank, tuple);
    if (is_connected(g)) {
      CanonicalCode code = connected_code(g);
      if (!found.count(code)) {
        const CatalogEntry* e = entry_for_code(code);
        found.emplace(code, e ? e->graph : canonical_form(g));
      }
    }
    int i = 0;
    for (; i < rank - 1; ++i) {
      if (++idx[i] < perms.size()) break;
      idx[i] = 0;
    }
    if (i == rank - 1) break;
  }
  std::vector<ColoredGraph> out;
  for (auto& [code, g] : found) out.push_back(g);
  return out;
}

std::vector<std::vector<ColoredGraph>> enumerate_boundaries(int rank, int max_vertices) {
  if (max_vertices > 8) throw GraphError("enumeration bound exceeded (at most 8 vertices)");
  const int n = max_vertices / 2;
  std::vector<ColoredGraph> classes;
  for (int k = 1; k <= n; ++k) {
    auto c = connected_classes(rank, k);
    classes.insert(classes.end(), c.begin(), c.end());
  }
  std::vector<std::vector<ColoredGraph>> out;
  std::vector<ColoredGraph> current;
  // Multisets as non-decreasing index sequences.
  auto rec = [&](auto&& self, std::size_t from, int budget) -> void {
    if (!current.empty()) out.push_back(current);
    for (std::size_t i = from; i < classes.size(); ++i) {
      if (classes[i].k() > budget) continue;
      current.push_back(classes[i]);
      self(self, i, budget - classes[i].k());
      current.pop_back();
    }
  };
  rec(rec, 0, n);
  return out;
}

bool beta_orbit_invariant(const std::vector<ColoredGraph>& word, const SdeOptions& opts) {
  Frame f = momentum_frame(word);
  const int rank = word.front().rank();
  auto group = automorphism_group(f.full);
  std::vector<std::string> lhs, rhs;
  std::vector<Equation> eqs;
  for (int b = 0; b < f.full.k(); ++b) {
    int comp = static_cast<int>(std::upper_bound(f.white_offset.begin(), f.white_offset.end(), b) - f.white_offset.begin()) - 1;
    eqs.push_back(generate_sde(word, {comp, b - f.white_offset[comp]}, opts));
    lhs.push_back(canonical_key(eqs.back().lhs));
    rhs.push_back(canonical_key(eqs.back().rhs));
  }
  for (int b = 0; b < f.full.k(); ++b)
    for (const auto& a : group) {
      int image = a.black[b];
      std::map<std::string, std::string> ren;
      for (int w = 0; w < f.full.k(); ++w) ren[f.names[w]] = f.names[a.white[w]];
      if (canonical_key(rename_symbols(eqs[b].lhs, ren, rank)) != lhs[image]) return false;
      if (canonical_key(rename_symbols(eqs[b].rhs, ren, rank)) != rhs[image]) return false;
    }
  return true;
}

}  // namespace tgc
