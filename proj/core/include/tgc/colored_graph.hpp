#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgc {

// 0-based image list: p[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm inverse(const Perm& p);
// (a*b)(i) = a(b(i))
Perm compose(const Perm& a, const Perm& b);
bool is_permutation(const Perm& p);
// Lexicographic enumeration of all permutations of {0..n-1}.
std::vector<Perm> all_perms(int n);

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed bipartite graph with D edge colours, stored as D maps white -> black.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  int rank() const { return rank_; }
  int k() const { return k_; }
  bool empty() const { return k_ == 0; }

  // Colours are 1-based at this interface, vertices 0-based.
  const Perm& color(int c) const { return pi_.at(c - 1); }
  int black_of(int c, int white) const { return pi_[c - 1][white]; }
  int white_of(int c, int black) const { return inv_[c - 1][black]; }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.rank_ == b.rank_ && a.pi_ == b.pi_;
  }
  friend bool operator<(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    return a.pi_ < b.pi_;
  }

  friend ColoredGraph make_graph(int rank, std::vector<Perm> perms);

 private:
  int rank_ = 0;
  int k_ = 0;
  std::vector<Perm> pi_;
  std::vector<Perm> inv_;
};

// perms may be empty (giving the empty graph) or hold exactly `rank` permutations.
ColoredGraph make_graph(int rank, std::vector<Perm> perms);
ColoredGraph empty_graph(int rank);
ColoredGraph melon(int rank);

// Relabel: new white w' = white_map[w], new black b' = black_map[b].
ColoredGraph relabel(const ColoredGraph& g, const Perm& white_map, const Perm& black_map);
ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b);
ColoredGraph disjoint_union(const std::vector<ColoredGraph>& parts, int rank);

bool is_connected(const ColoredGraph& g);

struct Component {
  ColoredGraph graph;
  std::vector<int> whites;  // local white i <-> original whites[i]
  std::vector<int> blacks;  // local black j <-> original blacks[j]
};
// Ordered by smallest original white index.
std::vector<Component> components(const ColoredGraph& g);

using CanonicalCode = std::string;

struct Labeling {
  Perm white;  // original -> canonical
  Perm black;
};

// Canonical labeling of a connected graph; canonical_form(g) = relabel(g, L.white, L.black).
Labeling canonical_labeling(const ColoredGraph& g);
ColoredGraph canonical_form(const ColoredGraph& g);
// For any graph: rank, component count, then sorted component codes.
CanonicalCode canonical_code(const ColoredGraph& g);
// Code of a connected graph only (no component framing).
CanonicalCode connected_code(const ColoredGraph& g);
bool isomorphic(const ColoredGraph& a, const ColoredGraph& b);
std::string code_hex(const CanonicalCode& code);
CanonicalCode code_from_hex(const std::string& hex);
// Inverse of connected_code.
ColoredGraph graph_from_connected_code(const CanonicalCode& code);

struct AutElement {
  Perm white;
  Perm black;
};

// Complete group; throws GraphError past `limit` elements.
std::vector<AutElement> automorphism_group(const ColoredGraph& g, std::size_t limit = 1000000);
std::size_t automorphism_count(const ColoredGraph& g);
// White maps of all isomorphisms a -> b (white of a -> white of b); empty if none. Connected only.
std::vector<AutElement> isomorphisms(const ColoredGraph& a, const ColoredGraph& b);

// pi_c := (beta rho) o pi_c.  c is 1-based, beta/rho 0-based blacks.
ColoredGraph edge_swap(const ColoredGraph& g, int c, int beta, int rho);

// Blacks tau != beta whose colour-c swap with beta disconnects g.
std::vector<int> bridge_pairs(const ColoredGraph& g, int beta, int c);

// slot[alpha][c-1] = white whose colour-c index feeds black alpha.
std::vector<std::vector<int>> induced_map(const ColoredGraph& g);

int face_count(const ColoredGraph& g);
int genus_rank3(const ColoredGraph& g);

std::string to_string(const ColoredGraph& g);

}  // namespace tgc
