#pragma once

#include <string>
#include <vector>

#include "tgc/colored_graph.hpp"
#include "tgc/expr.hpp"

namespace tgc {

// Symbols for the white vertices of a word, in component order, and the induced black momenta.
struct Frame {
  std::vector<ColoredGraph> word;
  ColoredGraph full;
  std::vector<int> white_offset;  // first global white of each component
  std::vector<std::string> names;  // per global white
  std::vector<Vec> whites;         // x^w
  std::vector<Vec> blacks;         // y^alpha
};

// x, y, z, u, v, w, ... (never b or q, which name bound indices).
std::string frame_symbol(int i);
Frame momentum_frame(const std::vector<ColoredGraph>& word);

// How the (C, B) factorization sums of the I- and H-families are weighted.
//  Orbit:   every subset of Q's positions once; the I-term sums f_C over Aut_c(C), so each
//           term appears once per image under the automorphisms fixing beta.
//  Literal: the sums over Aut_c(Q) with the 1/|Aut_c(B)| weight applied to each position subset.
enum class FactorizationConvention { Orbit, Literal };

struct SdeOptions {
  FactorizationConvention convention = FactorizationConvention::Orbit;
};

struct BetaChoice {
  int component;  // 0-based
  int black;      // 0-based within the component
};

// One representative (smallest global black) per Aut_c orbit.
std::vector<BetaChoice> inequivalent_beta_choices(const std::vector<ColoredGraph>& word);

Equation generate_sde(const std::vector<ColoredGraph>& word, BetaChoice beta, const SdeOptions& opts = {});

// Correlator of the colour-c swap of the whole word at the chosen black and global black rho.
Expr resolve_swap_correlator(const std::vector<ColoredGraph>& word, BetaChoice beta, int c, int rho);

// Position subsets of the remainder, as (C positions, B positions).
std::vector<std::pair<std::vector<int>, std::vector<int>>> factorizations(int degree);

// Isomorphism classes of connected rank-D graphs with 2k vertices (catalog labeling where named).
std::vector<ColoredGraph> connected_classes(int rank, int k);
// All words (multisets of connected classes, sorted by code) with at most max_vertices vertices.
std::vector<std::vector<ColoredGraph>> enumerate_boundaries(int rank, int max_vertices);

// Compares eq(beta) with eq(image of beta) for every automorphism; returns false on the first mismatch.
bool beta_orbit_invariant(const std::vector<ColoredGraph>& word, const SdeOptions& opts = {});

}  // namespace tgc
