#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tgc/colored_graph.hpp"
#include "tgc/rational.hpp"

namespace tgc {

// One momentum component: a symbol name in a fixed colour (1-based).
struct Atom {
  std::string name;
  int colour = 1;
  friend bool operator==(const Atom& a, const Atom& b) { return a.name == b.name && a.colour == b.colour; }
  friend bool operator<(const Atom& a, const Atom& b) {
    return a.colour != b.colour ? a.colour < b.colour : a.name < b.name;
  }
};

// A D-vector of momenta; slot c-1 holds the name of the colour-c component.
using Vec = std::vector<std::string>;
Vec uniform_vec(const std::string& name, int rank);

// Connected component of a correlator word. args are indexed by canonical white label.
struct Block {
  CanonicalCode code;
  std::vector<Vec> args;
  friend bool operator==(const Block& a, const Block& b) { return a.code == b.code && a.args == b.args; }
};

enum class Kind { Scalar, Lambda, Correlator, FCoeff, PropInv, PropDiffInv, IndexSum, Sum, Product };

class Expr;

struct Node {
  Kind kind = Kind::Scalar;
  Rational value;              // Scalar
  int power = 0;               // Lambda
  int colour = 0;              // FCoeff, PropDiffInv, IndexSum
  std::string name;            // FCoeff: s symbol; IndexSum: bound symbol
  std::string a, b;            // PropDiffInv: 1/E(a_c, b_c)
  Vec vec;                     // PropInv: 1/E_vec
  std::vector<Block> blocks;   // Correlator, FCoeff
  std::vector<Expr> children;  // Sum, Product, IndexSum (one child)
};

class Expr {
 public:
  Expr();
  explicit Expr(Node n);
  const Node& node() const { return *node_; }
  Kind kind() const { return node_->kind; }

 private:
  std::shared_ptr<const Node> node_;
};

class ExprError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Expr scalar(const Rational& v);
Expr scalar(long num, long den = 1);
Expr lambda_power(int n);
// Correlator of a labeled graph (any number of components); args[w] is the momentum of white w.
Expr correlator(const ColoredGraph& g, const std::vector<Vec>& args);
Expr correlator(const std::vector<ColoredGraph>& word, const std::vector<Vec>& args);
Expr correlator_blocks(std::vector<Block> blocks);
// f^{(c)}_{word, s_c}(args); word may be empty.
Expr fcoeff(int colour, const std::string& s, const std::vector<ColoredGraph>& word, const std::vector<Vec>& args);
Expr fcoeff_blocks(int colour, const std::string& s, std::vector<Block> blocks);
Expr prop_inv(const Vec& v);
Expr prop_diff_inv(int colour, const std::string& a, const std::string& b);
Expr index_sum(const std::string& bound, int colour, const Expr& body);
Expr sum(std::vector<Expr> terms);
Expr product(std::vector<Expr> factors);

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

// Blocks for a labeled word with flat argument list, in canonical labeling.
std::vector<Block> make_blocks(const std::vector<ColoredGraph>& word, const std::vector<Vec>& args);

// Replace the colour-c component `target` by `replacement` in every free argument.
// Throws if target is bound in scope; binders that would capture the replacement are renamed.
Expr substitute(const Expr& e, const Atom& target, const std::string& replacement);

// Simultaneous renaming of free atoms; binders are renamed where they would capture.
Expr rename_atoms(const Expr& e, const std::map<Atom, std::string>& r);
// Simultaneous renaming of free symbols in every colour 1..rank.
Expr rename_symbols(const Expr& e, const std::map<std::string, std::string>& r, int rank);

// Free atoms occurring in e (bound ones excluded), sorted, with multiplicity.
std::vector<Atom> free_atoms(const Expr& e);

// A flattened product of leaves under a chain of index sums.
struct Monomial {
  Rational coeff;
  int lambda = 0;
  std::vector<Atom> binders;
  std::vector<Expr> leaves;  // Correlator, FCoeff, PropInv, PropDiffInv
  std::string key;           // canonical identity of everything except coeff
};

// Expanded, canonically renamed and combined monomials in canonical order; zero terms dropped.
std::vector<Monomial> monomials(const Expr& e);
Expr to_expr(const Monomial& m);
Expr normalize(const Expr& e);
bool equal_normalized(const Expr& a, const Expr& b);
bool is_zero(const Expr& e);
// Stable identity of the normalized form.
std::string canonical_key(const Expr& e);

struct Equation {
  Expr lhs;
  Expr rhs;
};

// Text syntax, see README.
std::string render_text(const Expr& e);
std::string render_latex(const Expr& e);
std::string render_json(const Expr& e, int indent = -1);
Expr parse_text(const std::string& text, int rank = 3);
Expr parse_json(const std::string& json);

std::string render_text(const Equation& eq);
std::string render_latex(const Equation& eq);
std::string render_json(const Equation& eq, int indent = -1);
Equation parse_equation_json(const std::string& json);

// Expands colsum{a}( body ) over colours 1..3 with {a},{b},{c} placeholders ({b} < {c}).
std::string expand_colour_macros(const std::string& text);

}  // namespace tgc
