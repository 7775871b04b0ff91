#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "tgc/colored_graph.hpp"
#include "tgc/rational.hpp"

namespace tgc {

// One column of D colour indices per white vertex; word blocks are concatenated.
using Column = std::vector<int>;
using Momenta = std::vector<Column>;

// Ordered product of connected, non-empty graphs. The empty word is the unit.
class GraphWord {
 public:
  GraphWord() = default;
  GraphWord(int rank, std::vector<ColoredGraph> factors);

  int rank() const { return rank_; }
  int degree() const { return static_cast<int>(factors_.size()); }
  bool empty() const { return factors_.empty(); }
  const ColoredGraph& factor(int i) const { return factors_.at(i); }
  const std::vector<ColoredGraph>& factors() const { return factors_; }
  int total_k() const { return offsets_.empty() ? 0 : offsets_.back(); }
  int offset(int i) const { return i == 0 ? 0 : offsets_[i - 1]; }
  ColoredGraph full() const { return disjoint_union(factors_, rank_); }
  std::vector<int> arity() const;

  friend bool operator==(const GraphWord& a, const GraphWord& b) {
    return a.rank_ == b.rank_ && a.factors_ == b.factors_;
  }

 private:
  int rank_ = 0;
  std::vector<ColoredGraph> factors_;
  std::vector<int> offsets_;
};

GraphWord concat(const GraphWord& a, const GraphWord& b);
// 0-based position.
GraphWord word_delete(const GraphWord& g, int i);
// Factors of `to` are factors of `from` taken at positions order[0], order[1], ...
GraphWord word_permute(const GraphWord& from, const std::vector<int>& order);
// Equal in the free commutative monoid (same multiset of isomorphism classes).
bool commutatively_equal(const GraphWord& a, const GraphWord& b);
std::vector<CanonicalCode> factor_codes(const GraphWord& g);

// Element of G(h1) wr S(a1) x ...: block i goes to block mu[i], column j of block i to column sigma[i][j].
struct WordGroupElement {
  Perm mu;
  std::vector<Perm> sigma;
};

WordGroupElement identity_element(const GraphWord& g);
// Xi o Omega: Xi applied first, so that act(compose(Xi, Omega)) = act(Xi) act(Omega).
WordGroupElement compose(const WordGroupElement& xi, const WordGroupElement& omega);
WordGroupElement inverse(const WordGroupElement& e);
bool operator==(const WordGroupElement& a, const WordGroupElement& b);
std::vector<WordGroupElement> word_group(const GraphWord& g);
std::size_t word_group_order(const GraphWord& g);
// Global white-vertex map of the element on g.full().
Perm white_map(const GraphWord& g, const WordGroupElement& e);

struct CoefficientFn {
  std::vector<int> arity;
  std::function<Rational(const Momenta&)> fn;
  Rational operator()(const Momenta& x) const { return fn(x); }
};

CoefficientFn constant_fn(std::vector<int> arity, Rational value);
// Deterministic pseudo-random rational table over the whole momentum alphabet.
CoefficientFn hashed_table(std::vector<int> arity, std::uint64_t seed);
// Average of f over G(g): a G(g)-invariant coefficient.
CoefficientFn symmetrize(const CoefficientFn& f, const GraphWord& g);

// (Omega . f)(X) = f(X o P_Omega^-1).
CoefficientFn act(const WordGroupElement& omega, const GraphWord& g, const CoefficientFn& f);
// Coefficient on `to` representing (v, from) under reordering.
CoefficientFn reorder_coeff(const CoefficientFn& v, const GraphWord& from, const GraphWord& to);

struct Term {
  CoefficientFn coeff;
  GraphWord word;
};

struct Functional {
  int rank = 3;
  std::vector<Term> terms;
};

Functional functional_sum(const Functional& a, const Functional& b);
Functional functional_product(const Functional& u, const Functional& t);
// Terms reordered so that factors are sorted by canonical code.
Functional canonical_storage(const Functional& u);
// Drops terms whose word has more than 2*max_k vertices.
Functional truncated(const Functional& u, int max_k);
Functional functional_derivative(const Functional& u, const ColoredGraph& h, const Momenta& x);
CoefficientFn graph_derivative(const Functional& u, const GraphWord& h);
Functional borel(const Functional& v);
CoefficientFn leibniz_rhs(const Functional& u, const Functional& t, const GraphWord& g);
// Sum of the reordered coefficients of all terms commutatively equal to g, evaluated at x.
Rational coefficient_at(const Functional& u, const GraphWord& g, const Momenta& x);

// Colour-wise distinct entries (the off-diagonal domain).
bool in_domain(const Momenta& x, int rank);
Momenta random_momenta(int rank, int k, std::mt19937_64& rng, int alphabet = 9);

}  // namespace tgc
