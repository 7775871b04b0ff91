#pragma once

// Randomized identity checks for the graph calculus on table-backed coefficients.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tgc/catalog.hpp"
#include "tgc/graph_algebra.hpp"

namespace oracle {

inline tgc::ColoredGraph named(const std::string& name) { return tgc::find_entry(3, name)->graph; }

// One catalog entry per isomorphism class.
inline std::vector<tgc::CatalogEntry> catalog_classes() {
  std::vector<tgc::CatalogEntry> out;
  for (const auto& e : tgc::catalog(3))
    if (tgc::entry_for_code(e.code)->name == e.name) out.push_back(e);
  return out;
}

inline std::vector<tgc::ColoredGraph> small_pool() { return {named("m"), named("V1"), named("V2"), named("K33")}; }

inline tgc::GraphWord random_word(std::mt19937_64& rng, const std::vector<tgc::ColoredGraph>& pool, int max_degree,
                                  int max_k) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<tgc::ColoredGraph> f;
  int k = 0;
  for (int d = deg(rng); d > 0; --d) {
    const auto& g = pool[pick(rng)];
    if (k + g.k() > max_k) break;
    k += g.k();
    f.push_back(g);
  }
  return tgc::GraphWord(3, f);
}

inline tgc::Functional random_functional(std::mt19937_64& rng, const std::vector<tgc::ColoredGraph>& pool, int terms,
                                         int max_degree, int max_k) {
  tgc::Functional u{3, {}};
  for (int i = 0; i < terms; ++i) {
    auto w = random_word(rng, pool, max_degree, max_k);
    u.terms.push_back({tgc::hashed_table(w.arity(), rng()), w});
  }
  return u;
}

inline tgc::GraphWord shuffled(const tgc::GraphWord& w, std::mt19937_64& rng) {
  std::vector<int> order(w.degree());
  for (int i = 0; i < w.degree(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  return tgc::word_permute(w, order);
}

struct CaseResult {
  bool ok = true;
  std::string detail;
};

// leibniz_rhs(U, T, g) against graph_derivative(U T, g) at a random point of the off-diagonal domain.
inline CaseResult leibniz_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto pool = small_pool();
  auto u = random_functional(rng, pool, 3, 2, 4);
  auto t = random_functional(rng, pool, 3, 2, 4);
  // A repeated word gives several (j, l) pairs for the same g.
  u.terms.push_back({tgc::hashed_table(u.terms[0].word.arity(), rng()), shuffled(u.terms[0].word, rng)});
  std::uniform_int_distribution<std::size_t> pu(0, u.terms.size() - 1), pt(0, t.terms.size() - 1);
  auto g = shuffled(tgc::concat(u.terms[pu(rng)].word, t.terms[pt(rng)].word), rng);
  auto x = tgc::random_momenta(3, g.total_k(), rng);
  tgc::Rational lhs = tgc::leibniz_rhs(u, t, g)(x);
  tgc::Rational rhs = tgc::graph_derivative(tgc::functional_product(u, t), g)(x);
  if (lhs == rhs) return {};
  return {false, "seed " + std::to_string(seed) + ": " + lhs.get_str() + " vs " + rhs.get_str()};
}

// Derivative of the Borel transform of a symmetric functional versus the insertion formula.
inline CaseResult borel_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto pool = small_pool();
  std::map<std::vector<tgc::CanonicalCode>, tgc::GraphWord> words;
  for (int i = 0; i < 4; ++i) {
    auto w = random_word(rng, pool, 3, 5);
    auto codes = tgc::factor_codes(w);
    std::vector<int> order(w.degree());
    for (int j = 0; j < w.degree(); ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return codes[a] < codes[b]; });
    auto sorted = tgc::word_permute(w, order);
    words.emplace(tgc::factor_codes(sorted), sorted);
  }
  tgc::Functional v{3, {}};
  for (const auto& [codes, w] : words) v.terms.push_back({tgc::symmetrize(tgc::hashed_table(w.arity(), rng()), w), w});

  CaseResult res;
  for (const auto& h : pool) {
    for (const auto& term : v.terms) {
      const auto& w = term.word;
      int p = -1;
      for (int i = 0; i < w.degree() && p < 0; ++i)
        if (w.factor(i) == h) p = i;
      if (p < 0) continue;
      auto rest = tgc::word_delete(w, p);
      auto z = tgc::random_momenta(3, w.total_k(), rng);
      const int off = w.offset(p);
      tgc::Momenta x(z.begin() + off, z.begin() + off + h.k());
      tgc::Momenta y(z.begin(), z.begin() + off);
      y.insert(y.end(), z.begin() + off + h.k(), z.end());
      auto lhs_fn = tgc::functional_derivative(tgc::borel(v), h, x);
      tgc::Rational lhs = tgc::coefficient_at(lhs_fn, rest, y);
      tgc::Rational rhs = term.coeff(z) / tgc::Rational(static_cast<long>(tgc::word_group_order(rest)));
      if (lhs != rhs) {
        res.ok = false;
        res.detail = "seed " + std::to_string(seed) + ": " + lhs.get_str() + " vs " + rhs.get_str();
        return res;
      }
    }
  }
  return res;
}

inline long factorial_l(int n) { return n <= 1 ? 1 : n * factorial_l(n - 1); }
inline long binomial_l(int n, int k) { return factorial_l(n) / (factorial_l(k) * factorial_l(n - k)); }

inline tgc::GraphWord power_word(const std::vector<tgc::ColoredGraph>& hs, const std::vector<int>& powers) {
  std::vector<tgc::ColoredGraph> f;
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (int j = 0; j < powers[i]; ++j) f.push_back(hs[i]);
  return tgc::GraphWord(3, f);
}

// Trivial automorphisms and constant coefficients: the graph derivative of U T at h^alpha
// is the multinomial Leibniz sum of the graph derivatives of U and T.
inline CaseResult multinomial_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<tgc::ColoredGraph> hs{named("m"), named("F1;23"), named("F2;13")};
  const std::vector<int> top{2, 1, 1};
  std::vector<std::vector<int>> gammas;
  for (int a = 0; a <= top[0]; ++a)
    for (int b = 0; b <= top[1]; ++b)
      for (int c = 0; c <= top[2]; ++c) gammas.push_back({a, b, c});
  std::uniform_int_distribution<int> val(-9, 9);
  tgc::Functional u{3, {}}, t{3, {}};
  for (const auto& gm : gammas) {
    auto w = power_word(hs, gm);
    u.terms.push_back({tgc::constant_fn(w.arity(), tgc::make_rational(val(rng), 1 + rng() % 3)), w});
    t.terms.push_back({tgc::constant_fn(w.arity(), tgc::make_rational(val(rng), 1 + rng() % 3)), w});
  }
  std::uniform_int_distribution<int> ia(0, 2), ib(0, 1);
  std::vector<int> alpha{ia(rng), ib(rng), ib(rng)};
  auto g = power_word(hs, alpha);
  auto x = tgc::random_momenta(3, g.total_k(), rng);
  tgc::Rational lhs = tgc::graph_derivative(tgc::functional_product(u, t), g)(x);
  tgc::Rational rhs = 0;
  for (const auto& gm : gammas) {
    std::vector<int> rest(3);
    long coeff = 1;
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      if (gm[i] > alpha[i]) ok = false;
      rest[i] = alpha[i] - gm[i];
    }
    if (!ok) continue;
    for (int i = 0; i < 3; ++i) coeff *= binomial_l(alpha[i], gm[i]);
    auto wg = power_word(hs, gm);
    auto wr = power_word(hs, rest);
    tgc::Momenta xa(x.begin(), x.begin() + wg.total_k());
    tgc::Momenta xb(x.begin(), x.begin() + wr.total_k());
    rhs += tgc::Rational(coeff) * tgc::graph_derivative(u, wg)(xa) * tgc::graph_derivative(t, wr)(xb);
  }
  if (lhs == rhs) return {};
  return {false, "seed " + std::to_string(seed) + ": " + lhs.get_str() + " vs " + rhs.get_str()};
}

// |G(h^l f)| = l! |G(h)|^l |G(f)| = l |G(h)| |G(h^(l-1) f)| over all catalog multisets with at most max_parts factors.
inline CaseResult wreath_order_identity(int max_parts) {
  const auto cat = catalog_classes();
  std::vector<int> counts(cat.size(), 0);
  CaseResult res;
  std::size_t checked = 0;
  auto word_of = [&](const std::vector<int>& cs) {
    std::vector<tgc::ColoredGraph> f;
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (int j = 0; j < cs[i]; ++j) f.push_back(cat[i].graph);
    return tgc::GraphWord(3, f);
  };
  auto visit = [&](auto&& self, std::size_t i, int left) -> void {
    if (!res.ok) return;
    if (i == cat.size()) {
      for (std::size_t h = 0; h < cat.size(); ++h) {
        const int l = counts[h];
        if (l == 0) continue;
        auto f = counts;
        f[h] = 0;
        auto lower = counts;
        --lower[h];
        const std::size_t gh = tgc::automorphism_count(cat[h].graph);
        std::size_t p = 1;
        for (int j = 0; j < l; ++j) p *= gh;
        const std::size_t full = tgc::word_group_order(word_of(counts));
        const std::size_t a = static_cast<std::size_t>(factorial_l(l)) * p * tgc::word_group_order(word_of(f));
        const std::size_t b = static_cast<std::size_t>(l) * gh * tgc::word_group_order(word_of(lower));
        ++checked;
        if (full != a || full != b) {
          res.ok = false;
          res.detail = "mismatch at " + cat[h].name;
          return;
        }
      }
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[i] = c;
      self(self, i + 1, left - c);
    }
    counts[i] = 0;
  };
  visit(visit, 0, max_parts);
  res.detail = std::to_string(checked) + " instances";
  return res;
}

}  // namespace oracle
