#include "tgc/graph_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tgc {

GraphWord::GraphWord(int rank, std::vector<ColoredGraph> factors) : rank_(rank), factors_(std::move(factors)) {
  int acc = 0;
  for (const auto& f : factors_) {
    if (f.rank() != rank) throw GraphError("word factor has the wrong rank");
    if (f.empty() || !is_connected(f)) throw GraphError("word factors must be connected and non-empty");
    acc += f.k();
    offsets_.push_back(acc);
  }
}

std::vector<int> GraphWord::arity() const {
  std::vector<int> a;
  for (const auto& f : factors_) a.push_back(f.k());
  return a;
}

GraphWord concat(const GraphWord& a, const GraphWord& b) {
  if (!a.empty() && !b.empty() && a.rank() != b.rank()) throw GraphError("rank mismatch in word product");
  std::vector<ColoredGraph> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return GraphWord(a.empty() ? b.rank() : a.rank(), std::move(f));
}

GraphWord word_delete(const GraphWord& g, int i) {
  if (i < 0 || i >= g.degree()) throw GraphError("deletion index out of range");
  std::vector<ColoredGraph> f = g.factors();
  f.erase(f.begin() + i);
  return GraphWord(g.rank(), std::move(f));
}

GraphWord word_permute(const GraphWord& from, const std::vector<int>& order) {
  std::vector<ColoredGraph> f;
  for (int i : order) f.push_back(from.factor(i));
  return GraphWord(from.rank(), std::move(f));
}

std::vector<CanonicalCode> factor_codes(const GraphWord& g) {
  std::vector<CanonicalCode> out;
  for (const auto& f : g.factors()) out.push_back(connected_code(f));
  return out;
}

bool commutatively_equal(const GraphWord& a, const GraphWord& b) {
  if (a.rank() != b.rank() && !(a.empty() && b.empty())) return false;
  auto ca = factor_codes(a);
  auto cb = factor_codes(b);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

WordGroupElement identity_element(const GraphWord& g) {
  WordGroupElement e{identity_perm(g.degree()), {}};
  for (const auto& f : g.factors()) e.sigma.push_back(identity_perm(f.k()));
  return e;
}

WordGroupElement compose(const WordGroupElement& xi, const WordGroupElement& omega) {
  const std::size_t n = xi.mu.size();
  WordGroupElement r{Perm(n), std::vector<Perm>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    int mid = xi.mu[i];
    r.mu[i] = omega.mu[mid];
    r.sigma[i] = compose(omega.sigma[mid], xi.sigma[i]);
  }
  return r;
}

WordGroupElement inverse(const WordGroupElement& e) {
  const std::size_t n = e.mu.size();
  WordGroupElement r{inverse(e.mu), std::vector<Perm>(n)};
  for (std::size_t i = 0; i < n; ++i) r.sigma[e.mu[i]] = inverse(e.sigma[i]);
  return r;
}

bool operator==(const WordGroupElement& a, const WordGroupElement& b) {
  return a.mu == b.mu && a.sigma == b.sigma;
}

std::vector<WordGroupElement> word_group(const GraphWord& g) {
  const int n = g.degree();
  auto codes = factor_codes(g);
  std::vector<WordGroupElement> out;
  Perm mu = identity_perm(n);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = codes[i] == codes[mu[i]];
    if (!ok) continue;
    std::vector<std::vector<AutElement>> isos(n);
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
      isos[i] = isomorphisms(g.factor(i), g.factor(mu[i]));
      total *= isos[i].size();
    }
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t t = 0; t < total; ++t) {
      WordGroupElement e{mu, std::vector<Perm>(n)};
      for (int i = 0; i < n; ++i) e.sigma[i] = isos[i][idx[i]].white;
      out.push_back(std::move(e));
      for (int i = 0; i < n; ++i) {
        if (++idx[i] < isos[i].size()) break;
        idx[i] = 0;
      }
    }
  } while (std::next_permutation(mu.begin(), mu.end()));
  return out;
}

std::size_t word_group_order(const GraphWord& g) {
  std::map<CanonicalCode, std::size_t> mult;
  std::size_t total = 1;
  for (const auto& f : g.factors()) {
    total *= automorphism_count(f);
    total *= ++mult[connected_code(f)];
  }
  return total;
}

Perm white_map(const GraphWord& g, const WordGroupElement& e) {
  Perm p(g.total_k());
  for (int i = 0; i < g.degree(); ++i)
    for (int j = 0; j < g.factor(i).k(); ++j) p[g.offset(i) + j] = g.offset(e.mu[i]) + e.sigma[i][j];
  return p;
}

CoefficientFn constant_fn(std::vector<int> arity, Rational value) {
  return {std::move(arity), [value](const Momenta&) { return value; }};
}

namespace {

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

}  // namespace

CoefficientFn hashed_table(std::vector<int> arity, std::uint64_t seed) {
  return {std::move(arity), [seed](const Momenta& x) -> Rational {
            std::uint64_t h = mix(seed + 0x9e3779b97f4a7c15ULL);
            for (const auto& col : x)
              for (int v : col) h = mix(h ^ (static_cast<std::uint64_t>(v) + 0x632be59bd9b4e019ULL));
            long num = static_cast<long>(h % 21) - 10;
            long den = static_cast<long>((h >> 8) % 4) + 1;
            return make_rational(num, den);
          }};
}

CoefficientFn act(const WordGroupElement& omega, const GraphWord& g, const CoefficientFn& f) {
  Perm p = white_map(g, omega);
  return {f.arity, [p, f](const Momenta& x) -> Rational {
            Momenta z(x.size());
            for (std::size_t a = 0; a < x.size(); ++a) z[p[a]] = x[a];
            return f(z);
          }};
}

CoefficientFn symmetrize(const CoefficientFn& f, const GraphWord& g) {
  auto group = word_group(g);
  std::vector<CoefficientFn> images;
  for (const auto& e : group) images.push_back(act(e, g, f));
  Rational scale = make_rational(1, static_cast<long>(group.size()));
  return {f.arity, [images, scale](const Momenta& x) -> Rational {
            Rational s = 0;
            for (const auto& h : images) s += h(x);
            return s * scale;
          }};
}

CoefficientFn reorder_coeff(const CoefficientFn& v, const GraphWord& from, const GraphWord& to) {
  if (!commutatively_equal(from, to)) throw GraphError("reordering between words that are not equivalent");
  const int n = from.degree();
  auto cf = factor_codes(from);
  auto ct = factor_codes(to);
  // Stable matching: q-th factor of `to` comes from position src[q] of `from`.
  std::vector<int> src(n, -1);
  std::vector<char> used(n, 0);
  for (int q = 0; q < n; ++q)
    for (int p = 0; p < n; ++p)
      if (!used[p] && cf[p] == ct[q]) {
        used[p] = 1;
        src[q] = p;
        break;
      }
  // Column j of from-block p is column phi[p][j] of to-block q.
  std::vector<int> dst(n);
  std::vector<Perm> phi(n);
  for (int q = 0; q < n; ++q) {
    int p = src[q];
    dst[p] = q;
    phi[p] = isomorphisms(from.factor(p), to.factor(q)).front().white;
  }
  std::vector<int> map(from.total_k());
  for (int p = 0; p < n; ++p)
    for (int j = 0; j < from.factor(p).k(); ++j) map[from.offset(p) + j] = to.offset(dst[p]) + phi[p][j];
  return {to.arity(), [v, map](const Momenta& y) -> Rational {
            Momenta x(map.size());
            for (std::size_t a = 0; a < map.size(); ++a) x[a] = y[map[a]];
            return v(x);
          }};
}

Functional functional_sum(const Functional& a, const Functional& b) {
  Functional r = a;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  return r;
}

Functional functional_product(const Functional& u, const Functional& t) {
  Functional r{u.rank, {}};
  for (const auto& a : u.terms)
    for (const auto& b : t.terms) {
      GraphWord w = concat(a.word, b.word);
      const int split = a.word.total_k();
      CoefficientFn ua = a.coeff;
      CoefficientFn tb = b.coeff;
      r.terms.push_back({{w.arity(), [ua, tb, split](const Momenta& x) -> Rational {
                            Momenta left(x.begin(), x.begin() + split);
                            Momenta right(x.begin() + split, x.end());
                            return ua(left) * tb(right);
                          }},
                         w});
    }
  return r;
}

Functional canonical_storage(const Functional& u) {
  Functional r{u.rank, {}};
  for (const auto& t : u.terms) {
    auto codes = factor_codes(t.word);
    std::vector<int> order(t.word.degree());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return codes[a] < codes[b]; });
    GraphWord sorted = word_permute(t.word, order);
    r.terms.push_back({reorder_coeff(t.coeff, t.word, sorted), sorted});
  }
  return r;
}

Functional truncated(const Functional& u, int max_k) {
  Functional r{u.rank, {}};
  for (const auto& t : u.terms)
    if (t.word.total_k() <= max_k) r.terms.push_back(t);
  return r;
}

Functional functional_derivative(const Functional& u, const ColoredGraph& h, const Momenta& x) {
  if (h.empty()) {
    // Derivative with respect to the unit picks the constant coefficient.
    Functional r{u.rank, {}};
    for (const auto& t : u.terms)
      if (t.word.empty()) r.terms.push_back(t);
    return r;
  }
  if (!is_connected(h)) throw GraphError("functional derivative needs a connected graph");
  if (static_cast<int>(x.size()) != h.k()) throw GraphError("momentum shape does not match the graph");
  Functional r{u.rank, {}};
  for (const auto& t : u.terms) {
    for (int pos = 0; pos < t.word.degree(); ++pos) {
      for (const auto& iso : isomorphisms(h, t.word.factor(pos))) {
        GraphWord rest = word_delete(t.word, pos);
        const int off = t.word.offset(pos);
        Momenta placed(h.k());
        for (int j = 0; j < h.k(); ++j) placed[iso.white[j]] = x[j];
        CoefficientFn c = t.coeff;
        r.terms.push_back({{rest.arity(), [c, placed, off](const Momenta& y) -> Rational {
                              Momenta full(y.begin(), y.begin() + off);
                              full.insert(full.end(), placed.begin(), placed.end());
                              full.insert(full.end(), y.begin() + off, y.end());
                              return c(full);
                            }},
                           rest});
      }
    }
  }
  return r;
}

CoefficientFn graph_derivative(const Functional& u, const GraphWord& h) {
  return {h.arity(), [u, h](const Momenta& x) -> Rational {
            Functional cur = u;
            for (int i = 0; i < h.degree(); ++i) {
              Momenta block(x.begin() + h.offset(i), x.begin() + h.offset(i) + h.factor(i).k());
              cur = functional_derivative(cur, h.factor(i), block);
            }
            Rational s = 0;
            for (const auto& t : cur.terms)
              if (t.word.empty()) s += t.coeff(Momenta{});
            return s;
          }};
}

Functional borel(const Functional& v) {
  Functional r{v.rank, {}};
  for (const auto& t : v.terms) {
    Rational scale = make_rational(1, static_cast<long>(word_group_order(t.word)));
    CoefficientFn c = t.coeff;
    r.terms.push_back({{c.arity, [c, scale](const Momenta& x) -> Rational { return c(x) * scale; }}, t.word});
  }
  return r;
}

CoefficientFn leibniz_rhs(const Functional& u, const Functional& t, const GraphWord& g) {
  std::vector<CoefficientFn> pieces;
  auto group = word_group(g);
  for (const auto& a : u.terms)
    for (const auto& b : t.terms) {
      GraphWord jl = concat(a.word, b.word);
      if (!commutatively_equal(jl, g)) continue;
      Functional single{u.rank, {a}};
      Functional other{t.rank, {b}};
      CoefficientFn prod = functional_product(single, other).terms.front().coeff;
      CoefficientFn ordered = reorder_coeff(prod, jl, g);
      for (const auto& e : group) pieces.push_back(act(e, g, ordered));
    }
  return {g.arity(), [pieces](const Momenta& x) -> Rational {
            Rational s = 0;
            for (const auto& p : pieces) s += p(x);
            return s;
          }};
}

Rational coefficient_at(const Functional& u, const GraphWord& g, const Momenta& x) {
  Rational s = 0;
  for (const auto& t : u.terms)
    if (commutatively_equal(t.word, g)) s += reorder_coeff(t.coeff, t.word, g)(x);
  return s;
}

bool in_domain(const Momenta& x, int rank) {
  for (int c = 0; c < rank; ++c)
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = a + 1; b < x.size(); ++b)
        if (x[a].at(c) == x[b].at(c)) return false;
  return true;
}

Momenta random_momenta(int rank, int k, std::mt19937_64& rng, int alphabet) {
  if (k > alphabet) throw std::invalid_argument("alphabet too small for distinct entries");
  Momenta x(k, Column(rank));
  std::vector<int> values(alphabet);
  for (int c = 0; c < rank; ++c) {
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    for (int a = 0; a < k; ++a) x[a][c] = values[a];
  }
  return x;
}

}  // namespace tgc
