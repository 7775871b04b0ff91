#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgc/rational.hpp"

namespace tgc {

class TutteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truncated polynomial in t and lambda_3..lambda_d.
// An exponent vector is {deg_t, n_3, ..., n_d}; terms with deg_t > order are dropped.
class PolySeries {
 public:
  using Exponent = std::vector<int>;

  PolySeries(int d, int order);
  static PolySeries t_power(int d, int order, int k);

  int d() const { return d_; }
  int order() const { return order_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);
  // Multiplies by lambda_alpha.
  PolySeries times_lambda(int alpha) const;
  PolySeries scaled(const Rational& c) const;
  PolySeries truncated(int order) const;

  PolySeries& operator+=(const PolySeries& b);
  friend PolySeries operator+(const PolySeries& a, const PolySeries& b);
  friend PolySeries operator*(const PolySeries& a, const PolySeries& b);
  friend bool operator==(const PolySeries& a, const PolySeries& b);

  std::string to_string() const;

 private:
  int d_;
  int order_;
  std::map<Exponent, Rational> terms_;
};

// Memoized generating functions T^(g)_{l_1..l_kappa} at fixed d and t-order.
// Conventions: T^(0)_0 = t; T^(g)_0 = 0 for g >= 1; any entry with kappa >= 2 and a zero perimeter vanishes.
class GenFunTable {
 public:
  explicit GenFunTable(int order, int d = 4);

  int d() const { return d_; }
  int order() const { return order_; }

  const PolySeries& get(int genus, std::vector<int> perimeters);
  // Applies the recursion once to entries already in (or added to) the table, without reading the entry itself.
  PolySeries recompute(int genus, std::vector<int> perimeters);

  using Key = std::pair<int, std::vector<int>>;
  const std::map<Key, PolySeries>& entries() const { return memo_; }

 private:
  const PolySeries& at(int genus, std::vector<int> perimeters, int order);
  PolySeries evaluate(int genus, const std::vector<int>& sorted, int order);

  int d_;
  int order_;
  std::map<Key, PolySeries> memo_;
  std::map<int, std::map<Key, PolySeries>> partial_;  // entries needed only to a lower t-order
};

PolySeries tutte_planar(int l, int order, int d = 4);
PolySeries tutte_general(int genus, const std::vector<int>& perimeters, int order, int d = 4);

// Number of genus-g maps with kappa rooted marked faces of the given perimeters (all >= 1)
// and face_content[i] unmarked polygons of size 3+i; connected; counted up to isomorphism.
// Throws if the total edge count exceeds max_edges or the boundary data is invalid.
std::int64_t brute_force_map_count(int genus, const std::vector<int>& perimeters,
                                   const std::vector<int>& face_content, int max_edges = 12);

// Same enumeration, all genera at once; entry g is the genus-g count.
std::vector<std::int64_t> brute_force_genus_profile(const std::vector<int>& perimeters,
                                                    const std::vector<int>& face_content, int max_edges = 12);

// Exponent of t fixed by Euler's relation; -1 if the data admit no map.
int vertex_count(int genus, const std::vector<int>& perimeters, const std::vector<int>& face_content);

}  // namespace tgc
