#include "tgc/colored_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tgc {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

ColoredGraph make_graph(int rank, std::vector<Perm> perms) {
  if (rank < 1) throw GraphError("rank must be at least 1");
  ColoredGraph g;
  g.rank_ = rank;
  if (perms.empty()) {
    g.k_ = 0;
    g.pi_.assign(rank, Perm{});
    g.inv_.assign(rank, Perm{});
    return g;
  }
  if (static_cast<int>(perms.size()) != rank)
    throw GraphError("expected " + std::to_string(rank) + " colours, got " +
                     std::to_string(perms.size()));
  const std::size_t k = perms.front().size();
  for (const auto& p : perms) {
    if (p.size() != k) throw GraphError("colours act on sets of different size");
    if (!is_permutation(p)) throw GraphError("colour map is not a bijection");
  }
  g.k_ = static_cast<int>(k);
  g.pi_ = std::move(perms);
  g.inv_.reserve(rank);
  for (const auto& p : g.pi_) g.inv_.push_back(inverse(p));
  return g;
}

ColoredGraph empty_graph(int rank) { return make_graph(rank, {}); }

ColoredGraph melon(int rank) { return make_graph(rank, std::vector<Perm>(rank, Perm{0})); }

ColoredGraph relabel(const ColoredGraph& g, const Perm& white_map, const Perm& black_map) {
  if (g.empty()) return g;
  std::vector<Perm> perms(g.rank(), Perm(g.k()));
  for (int c = 1; c <= g.rank(); ++c)
    for (int w = 0; w < g.k(); ++w) perms[c - 1][white_map[w]] = black_map[g.black_of(c, w)];
  return make_graph(g.rank(), std::move(perms));
}

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.rank() != b.rank()) throw GraphError("rank mismatch in disjoint union");
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<Perm> perms(a.rank());
  for (int c = 1; c <= a.rank(); ++c) {
    Perm p = a.color(c);
    for (int x : b.color(c)) p.push_back(x + a.k());
    perms[c - 1] = std::move(p);
  }
  return make_graph(a.rank(), std::move(perms));
}

ColoredGraph disjoint_union(const std::vector<ColoredGraph>& parts, int rank) {
  ColoredGraph g = empty_graph(rank);
  for (const auto& p : parts) g = disjoint_union(g, p);
  return g;
}

namespace {

// Whites reachable from w0, in BFS order.
std::vector<int> white_orbit(const ColoredGraph& g, int w0, std::vector<char>& seen) {
  std::vector<int> order{w0};
  seen[w0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int w = order[i];
    for (int c = 1; c <= g.rank(); ++c) {
      int b = g.black_of(c, w);
      for (int d = 1; d <= g.rank(); ++d) {
        int w2 = g.white_of(d, b);
        if (!seen[w2]) {
          seen[w2] = 1;
          order.push_back(w2);
        }
      }
    }
  }
  return order;
}

// Traversal labeling rooted at white w0 (connected g).
Labeling rooted_labeling(const ColoredGraph& g, int w0) {
  const int k = g.k();
  Labeling L{Perm(k, -1), Perm(k, -1)};
  std::vector<int> order{w0};
  L.white[w0] = 0;
  int nb = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int w = order[i];
    for (int c = 1; c <= g.rank(); ++c) {
      int b = g.black_of(c, w);
      if (L.black[b] >= 0) continue;
      L.black[b] = nb++;
      for (int d = 1; d <= g.rank(); ++d) {
        int w2 = g.white_of(d, b);
        if (L.white[w2] < 0) {
          L.white[w2] = static_cast<int>(order.size());
          order.push_back(w2);
        }
      }
    }
  }
  return L;
}

CanonicalCode encode(const ColoredGraph& g) {
  CanonicalCode s;
  s.push_back(static_cast<char>(g.k()));
  for (int c = 1; c <= g.rank(); ++c)
    for (int w = 0; w < g.k(); ++w) s.push_back(static_cast<char>(g.black_of(c, w)));
  return s;
}

void require_connected(const ColoredGraph& g, const char* what) {
  if (!is_connected(g)) throw GraphError(std::string(what) + " requires a connected graph");
}

}  // namespace

bool is_connected(const ColoredGraph& g) {
  if (g.empty()) return true;
  std::vector<char> seen(g.k(), 0);
  return static_cast<int>(white_orbit(g, 0, seen).size()) == g.k();
}

std::vector<Component> components(const ColoredGraph& g) {
  std::vector<Component> out;
  std::vector<char> seen(g.k(), 0);
  for (int w0 = 0; w0 < g.k(); ++w0) {
    if (seen[w0]) continue;
    std::vector<int> whites = white_orbit(g, w0, seen);
    std::sort(whites.begin(), whites.end());
    std::vector<int> blacks;
    for (int w : whites) blacks.push_back(g.black_of(1, w));
    std::sort(blacks.begin(), blacks.end());
    std::vector<Perm> perms(g.rank(), Perm(whites.size()));
    for (int c = 1; c <= g.rank(); ++c)
      for (std::size_t i = 0; i < whites.size(); ++i) {
        int b = g.black_of(c, whites[i]);
        perms[c - 1][i] =
            static_cast<int>(std::lower_bound(blacks.begin(), blacks.end(), b) - blacks.begin());
      }
    out.push_back({make_graph(g.rank(), std::move(perms)), std::move(whites), std::move(blacks)});
  }
  return out;
}

Labeling canonical_labeling(const ColoredGraph& g) {
  require_connected(g, "canonical_labeling");
  if (g.empty()) return {};
  Labeling best;
  CanonicalCode best_code;
  for (int w0 = 0; w0 < g.k(); ++w0) {
    Labeling L = rooted_labeling(g, w0);
    CanonicalCode code = encode(relabel(g, L.white, L.black));
    if (w0 == 0 || code < best_code) {
      best_code = std::move(code);
      best = std::move(L);
    }
  }
  return best;
}

ColoredGraph canonical_form(const ColoredGraph& g) {
  Labeling L = canonical_labeling(g);
  return relabel(g, L.white, L.black);
}

CanonicalCode connected_code(const ColoredGraph& g) {
  CanonicalCode s;
  s.push_back(static_cast<char>(g.rank()));
  s += encode(canonical_form(g));
  return s;
}

CanonicalCode canonical_code(const ColoredGraph& g) {
  std::vector<CanonicalCode> parts;
  for (const auto& comp : components(g)) parts.push_back(encode(canonical_form(comp.graph)));
  std::sort(parts.begin(), parts.end());
  CanonicalCode s;
  s.push_back(static_cast<char>(g.rank()));
  s.push_back(static_cast<char>(parts.size()));
  for (const auto& p : parts) s += p;
  return s;
}

bool isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  return a.rank() == b.rank() && a.k() == b.k() && canonical_code(a) == canonical_code(b);
}

std::string code_hex(const CanonicalCode& code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char ch : code) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 15]);
  }
  return out;
}

CanonicalCode code_from_hex(const std::string& hex) {
  if (hex.size() % 2) throw GraphError("odd-length code");
  CanonicalCode out;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16)));
  return out;
}

ColoredGraph graph_from_connected_code(const CanonicalCode& code) {
  if (code.size() < 2) throw GraphError("truncated code");
  int rank = static_cast<unsigned char>(code[0]);
  int k = static_cast<unsigned char>(code[1]);
  if (static_cast<int>(code.size()) != 2 + rank * k) throw GraphError("malformed code");
  if (k == 0) return empty_graph(rank);
  std::vector<Perm> perms(rank, Perm(k));
  for (int c = 0; c < rank; ++c)
    for (int w = 0; w < k; ++w) perms[c][w] = static_cast<unsigned char>(code[2 + c * k + w]);
  ColoredGraph g = make_graph(rank, std::move(perms));
  if (!is_connected(g) || connected_code(g) != code) throw GraphError("not a canonical code");
  return g;
}

std::vector<AutElement> isomorphisms(const ColoredGraph& a, const ColoredGraph& b) {
  std::vector<AutElement> out;
  if (a.rank() != b.rank() || a.k() != b.k()) return out;
  if (a.empty()) {
    out.push_back({});
    return out;
  }
  require_connected(a, "isomorphisms");
  require_connected(b, "isomorphisms");
  // Fix one rooted labeling of a; every b-root with the same relabeled graph gives an isomorphism.
  Labeling La = rooted_labeling(a, 0);
  ColoredGraph ca = relabel(a, La.white, La.black);
  for (int w0 = 0; w0 < b.k(); ++w0) {
    Labeling Lb = rooted_labeling(b, w0);
    if (relabel(b, Lb.white, Lb.black) == ca)
      out.push_back({compose(inverse(Lb.white), La.white), compose(inverse(Lb.black), La.black)});
  }
  return out;
}

std::vector<AutElement> automorphism_group(const ColoredGraph& g, std::size_t limit) {
  auto comps = components(g);
  if (comps.empty()) return {AutElement{}};
  // Group components by isomorphism class, keeping first-occurrence order.
  std::vector<CanonicalCode> codes;
  for (const auto& c : comps) codes.push_back(connected_code(c.graph));
  std::vector<std::vector<AutElement>> auts;
  for (const auto& c : comps) auts.push_back(isomorphisms(c.graph, c.graph));

  const int n = static_cast<int>(comps.size());
  std::vector<AutElement> out;
  // Enumerate block permutations mu (class-preserving) then per-component choices.
  Perm mu = identity_perm(n);
  std::vector<Perm> blocks;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = codes[i] == codes[mu[i]];
    if (ok) blocks.push_back(mu);
  } while (std::next_permutation(mu.begin(), mu.end()));

  for (const auto& m : blocks) {
    std::vector<std::vector<AutElement>> choices(n);
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
      choices[i] = isomorphisms(comps[i].graph, comps[m[i]].graph);
      total *= choices[i].size();
      if (out.size() + total > limit) throw GraphError("automorphism group exceeds search bound");
    }
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t t = 0; t < total; ++t) {
      AutElement e{Perm(g.k()), Perm(g.k())};
      for (int i = 0; i < n; ++i) {
        const auto& iso = choices[i][idx[i]];
        const auto& src = comps[i];
        const auto& dst = comps[m[i]];
        for (std::size_t j = 0; j < src.whites.size(); ++j) {
          e.white[src.whites[j]] = dst.whites[iso.white[j]];
          e.black[src.blacks[j]] = dst.blacks[iso.black[j]];
        }
      }
      out.push_back(std::move(e));
      for (int i = 0; i < n; ++i) {
        if (++idx[i] < choices[i].size()) break;
        idx[i] = 0;
      }
    }
  }
  return out;
}

std::size_t automorphism_count(const ColoredGraph& g) {
  auto comps = components(g);
  std::vector<std::pair<CanonicalCode, std::size_t>> classes;
  std::size_t total = 1;
  for (const auto& c : comps) {
    CanonicalCode code = connected_code(c.graph);
    std::size_t a = isomorphisms(c.graph, c.graph).size();
    total *= a;
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& p) { return p.first == code; });
    if (it == classes.end()) {
      classes.emplace_back(code, 1);
    } else {
      total *= ++it->second;
    }
  }
  return total;
}

ColoredGraph edge_swap(const ColoredGraph& g, int c, int beta, int rho) {
  if (c < 1 || c > g.rank()) throw GraphError("colour out of range");
  if (beta < 0 || rho < 0 || beta >= g.k() || rho >= g.k()) throw GraphError("black index out of range");
  if (beta == rho) throw GraphError("swap needs two distinct black vertices");
  std::vector<Perm> perms;
  for (int d = 1; d <= g.rank(); ++d) perms.push_back(g.color(d));
  for (int& b : perms[c - 1]) {
    if (b == beta) {
      b = rho;
    } else if (b == rho) {
      b = beta;
    }
  }
  return make_graph(g.rank(), std::move(perms));
}

std::vector<int> bridge_pairs(const ColoredGraph& g, int beta, int c) {
  require_connected(g, "bridge_pairs");
  if (g.empty()) throw GraphError("bridge_pairs needs a non-empty graph");
  if (beta < 0 || beta >= g.k()) throw GraphError("black index out of range");
  std::vector<int> out;
  for (int tau = 0; tau < g.k(); ++tau)
    if (tau != beta && !is_connected(edge_swap(g, c, beta, tau))) out.push_back(tau);
  return out;
}

std::vector<std::vector<int>> induced_map(const ColoredGraph& g) {
  std::vector<std::vector<int>> slot(g.k(), std::vector<int>(g.rank()));
  for (int a = 0; a < g.k(); ++a)
    for (int c = 1; c <= g.rank(); ++c) slot[a][c - 1] = g.white_of(c, a);
  return slot;
}

int face_count(const ColoredGraph& g) {
  int faces = 0;
  for (int c = 1; c <= g.rank(); ++c)
    for (int d = c + 1; d <= g.rank(); ++d) {
      // Bicoloured cycles: white -> black along c, back to white along d.
      std::vector<char> seen(g.k(), 0);
      for (int w = 0; w < g.k(); ++w) {
        if (seen[w]) continue;
        ++faces;
        for (int x = w; !seen[x]; x = g.white_of(d, g.black_of(c, x))) seen[x] = 1;
      }
    }
  return faces;
}

int genus_rank3(const ColoredGraph& g) {
  if (g.rank() != 3) throw GraphError("genus_rank3 needs rank 3");
  require_connected(g, "genus_rank3");
  if (g.empty()) throw GraphError("genus of the empty graph is undefined");
  // 2 - 2g = V - E + F with V = 2k, E = 3k.
  int twice = 2 + g.k() - face_count(g);
  if (twice < 0 || twice % 2) throw GraphError("non-integer genus");
  return twice / 2;
}

std::string to_string(const ColoredGraph& g) {
  std::ostringstream os;
  os << "(" << g.rank() << ", [";
  for (int c = 1; c <= g.rank(); ++c) {
    if (c > 1) os << ", ";
    os << "[";
    for (int w = 0; w < g.k(); ++w) os << (w ? "," : "") << g.black_of(c, w) + 1;
    os << "]";
  }
  os << "])";
  return os.str();
}

}  // namespace tgc
