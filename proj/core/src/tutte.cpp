#include "tgc/tutte.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tgc {

PolySeries::PolySeries(int d, int order) : d_(d), order_(order) {
  if (d < 3 || d > 8) throw TutteError("polygon bound d must lie in 3..8");
  if (order < 0) throw TutteError("negative truncation order");
}

PolySeries PolySeries::t_power(int d, int order, int k) {
  PolySeries p(d, order);
  Exponent e(static_cast<std::size_t>(d - 1), 0);
  e[0] = k;
  p.add_term(e, Rational(1));
  return p;
}

Rational PolySeries::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PolySeries::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != static_cast<std::size_t>(d_ - 1)) throw TutteError("exponent length mismatch");
  if (e[0] > order_ || c == 0) return;
  Rational& slot = terms_[e];
  slot += c;
  if (slot == 0) terms_.erase(e);
}

PolySeries PolySeries::times_lambda(int alpha) const {
  if (alpha < 3 || alpha > d_) throw TutteError("lambda index out of range");
  PolySeries r(d_, order_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    ++f[static_cast<std::size_t>(alpha - 2)];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

PolySeries PolySeries::scaled(const Rational& c) const {
  PolySeries r(d_, order_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

PolySeries PolySeries::truncated(int order) const {
  PolySeries r(d_, std::min(order, order_));
  for (const auto& [e, c] : terms_)
    if (e[0] <= r.order_) r.terms_.emplace(e, c);
  return r;
}

static void check_compatible(const PolySeries& a, const PolySeries& b) {
  if (a.d() != b.d()) throw TutteError("polygon bounds differ");
  if (a.order() != b.order()) throw TutteError("inconsistent truncation orders");
}

PolySeries& PolySeries::operator+=(const PolySeries& b) {
  check_compatible(*this, b);
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

PolySeries operator+(const PolySeries& a, const PolySeries& b) {
  PolySeries r = a;
  r += b;
  return r;
}

PolySeries operator*(const PolySeries& a, const PolySeries& b) {
  check_compatible(a, b);
  PolySeries r(a.d_, a.order_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      if (ea[0] + eb[0] > r.order_) continue;
      PolySeries::Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const PolySeries& a, const PolySeries& b) {
  return a.d_ == b.d_ && a.order_ == b.order_ && a.terms_ == b.terms_;
}

std::string PolySeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    bool unit = a == 1;
    bool any = false;
    if (!unit) os << a.get_str();
    auto factor = [&](const std::string& s, int k) {
      if (k == 0) return;
      if (!unit || any) os << "*";
      os << s;
      if (k > 1) os << "^" << k;
      any = true;
    };
    factor("t", e[0]);
    for (std::size_t i = 1; i < e.size(); ++i) factor("lambda" + std::to_string(i + 2), e[i]);
    if (unit && !any) os << "1";
  }
  return os.str();
}

GenFunTable::GenFunTable(int order, int d) : d_(d), order_(order) {
  PolySeries probe(d, order);
  (void)probe;
}

const PolySeries& GenFunTable::get(int genus, std::vector<int> perimeters) {
  if (genus < 0) throw TutteError("negative genus requested");
  for (int l : perimeters)
    if (l < 0) throw TutteError("negative perimeter");
  if (perimeters.empty()) throw TutteError("at least one marked face is required");
  std::sort(perimeters.begin(), perimeters.end());
  return at(genus, perimeters, order_);
}

PolySeries GenFunTable::recompute(int genus, std::vector<int> perimeters) {
  for (int l : perimeters)
    if (l < 0) throw TutteError("negative perimeter");
  if (perimeters.empty()) throw TutteError("at least one marked face is required");
  std::sort(perimeters.begin(), perimeters.end());
  return evaluate(genus, perimeters, order_);
}

const PolySeries& GenFunTable::at(int genus, std::vector<int> sorted, int order) {
  std::sort(sorted.begin(), sorted.end());
  auto& level = order == order_ ? memo_ : partial_[order];
  Key key{genus, std::move(sorted)};
  auto it = level.find(key);
  if (it != level.end()) return it->second;
  PolySeries v = evaluate(key.first, key.second, order);
  return level.emplace(std::move(key), std::move(v)).first->second;
}

namespace {

// Least t-degree any map with this boundary data can have.
int least_vertices(int genus, const std::vector<int>& p) {
  const int total = std::accumulate(p.begin(), p.end(), 0);
  const int twice = 4 - 4 * genus - 2 * static_cast<int>(p.size()) + total;
  return std::max(1, (twice + 1) / 2);
}

PolySeries lifted(const PolySeries& s, int order) {
  PolySeries r(s.d(), order);
  for (const auto& [e, c] : s.terms()) r.add_term(e, c);
  return r;
}

}  // namespace

PolySeries GenFunTable::evaluate(int genus, const std::vector<int>& p, int order) {
  if (genus < 0) throw std::logic_error("recursion requested a negative genus");
  const int kappa = static_cast<int>(p.size());
  PolySeries zero(d_, order);
  if (p.front() == 0) {
    if (kappa == 1 && genus == 0) return PolySeries::t_power(d_, order, 1);
    return zero;
  }
  if (least_vertices(genus, p) > order) return zero;

  const int l1 = p.back() - 1;
  std::vector<int> rest(p.begin(), p.end() - 1);
  auto with = [](std::vector<int> k, std::initializer_list<int> extra) {
    k.insert(k.end(), extra.begin(), extra.end());
    return k;
  };

  PolySeries acc(d_, order);
  for (int alpha = 3; alpha <= d_; ++alpha) acc += at(genus, with(rest, {l1 + alpha - 1}), order).times_lambda(alpha);

  for (std::size_t m = 0; m < rest.size(); ++m) {
    std::vector<int> k = rest;
    int lm = k[m];
    k.erase(k.begin() + static_cast<std::ptrdiff_t>(m));
    acc += at(genus, with(k, {l1 + lm - 1}), order).scaled(Rational(lm));
  }

  const std::size_t subsets = std::size_t{1} << rest.size();
  for (int j = 0; j < l1; ++j) {
    const int j2 = l1 - 1 - j;
    if (genus >= 1) acc += at(genus - 1, with(rest, {j, j2}), order);
    for (int g1 = 0; g1 <= genus; ++g1) {
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<int> a{j}, b{j2};
        for (std::size_t i = 0; i < rest.size(); ++i) ((mask >> i) & 1 ? a : b).push_back(rest[i]);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if ((a.size() > 1 && a.front() == 0) || (b.size() > 1 && b.front() == 0)) continue;
        const int oa = order - least_vertices(genus - g1, b);
        const int ob = order - least_vertices(g1, a);
        if (oa < 1 || ob < 1) continue;
        const PolySeries& left = at(g1, a, oa);
        if (left.is_zero()) continue;
        const PolySeries& right = at(genus - g1, b, ob);
        if (right.is_zero()) continue;
        acc += lifted(left, order) * lifted(right, order);
      }
    }
  }
  return acc;
}

PolySeries tutte_planar(int l, int order, int d) {
  if (l < 0) throw TutteError("negative perimeter");
  GenFunTable table(order, d);
  return table.get(0, {l});
}

PolySeries tutte_general(int genus, const std::vector<int>& perimeters, int order, int d) {
  GenFunTable table(order, d);
  return table.get(genus, perimeters);
}

int vertex_count(int genus, const std::vector<int>& perimeters, const std::vector<int>& face_content) {
  const int kappa = static_cast<int>(perimeters.size());
  int sides = std::accumulate(perimeters.begin(), perimeters.end(), 0);
  int faces = kappa;
  for (std::size_t i = 0; i < face_content.size(); ++i) {
    sides += face_content[i] * static_cast<int>(i + 3);
    faces += face_content[i];
  }
  if (sides % 2 != 0) return -1;
  int v = 2 - 2 * genus + sides / 2 - faces;
  return v >= 1 ? v : -1;
}

namespace {

struct Gluing {
  std::vector<int> face_of;          // side -> face
  std::vector<int> next;             // face permutation on sides
  std::vector<int> first;            // face -> first side
  std::vector<std::uint64_t> sides;  // face -> mask of its sides
  int kappa = 0;
  int faces = 0;

  std::vector<int> partner;
  std::uint64_t open = 0;  // unpaired sides of touched faces
  std::vector<std::vector<int>> untouched;  // polygon size -> untouched faces
  int untouched_total = 0;
  std::vector<std::int64_t> by_genus;

  // genus of the completed gluing, or -1 if the marked faces lie in different components
  int genus_of() const {
    if (kappa > 1) {
      std::uint64_t reached = sides[0];
      std::uint64_t frontier = reached;
      while (frontier) {
        std::uint64_t grow = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) {
          int x = __builtin_ctzll(m);
          grow |= sides[static_cast<std::size_t>(face_of[static_cast<std::size_t>(partner[static_cast<std::size_t>(x)])])];
        }
        frontier = grow & ~reached;
        reached |= grow;
      }
      for (int f = 1; f < kappa; ++f)
        if (!(reached & sides[static_cast<std::size_t>(f)])) return -1;
    }
    const int n = static_cast<int>(partner.size());
    std::uint64_t seen = 0;
    int vertices = 0;
    for (int x0 = 0; x0 < n; ++x0) {
      if (seen >> x0 & 1) continue;
      ++vertices;
      int x = x0;
      while (!(seen >> x & 1)) {
        seen |= std::uint64_t{1} << x;
        x = next[static_cast<std::size_t>(partner[static_cast<std::size_t>(x)])];
      }
    }
    return (2 - vertices + n / 2 - faces) / 2;
  }

  void search(std::int64_t weight) {
    if (!open) {
      if (untouched_total > 0) return;
      int g = genus_of();
      if (g < 0) return;
      if (by_genus.size() <= static_cast<std::size_t>(g)) by_genus.resize(static_cast<std::size_t>(g) + 1, 0);
      by_genus[static_cast<std::size_t>(g)] += weight;
      return;
    }
    const int s = __builtin_ctzll(open);
    const std::uint64_t sbit = std::uint64_t{1} << s;
    open &= ~sbit;
    for (std::uint64_t m = open; m; m &= m - 1) {
      const int t = __builtin_ctzll(m);
      const std::uint64_t tbit = std::uint64_t{1} << t;
      partner[static_cast<std::size_t>(s)] = t;
      partner[static_cast<std::size_t>(t)] = s;
      open &= ~tbit;
      search(weight);
      open |= tbit;
    }
    for (std::size_t alpha = 0; alpha < untouched.size(); ++alpha) {
      auto& pool = untouched[alpha];
      if (pool.empty()) continue;
      const std::int64_t mult = static_cast<std::int64_t>(pool.size()) * static_cast<std::int64_t>(alpha);
      const int f = pool.back();
      pool.pop_back();
      --untouched_total;
      const int t = first[static_cast<std::size_t>(f)];
      const std::uint64_t added = sides[static_cast<std::size_t>(f)] & ~(std::uint64_t{1} << t);
      partner[static_cast<std::size_t>(s)] = t;
      partner[static_cast<std::size_t>(t)] = s;
      open |= added;
      search(weight * mult);
      open &= ~added;
      ++untouched_total;
      pool.push_back(f);
    }
    open |= sbit;
  }
};

}  // namespace

std::vector<std::int64_t> brute_force_genus_profile(const std::vector<int>& perimeters,
                                                    const std::vector<int>& face_content, int max_edges) {
  if (perimeters.empty()) throw TutteError("at least one marked face is required");
  for (int l : perimeters)
    if (l < 1) throw TutteError("marked perimeters must be positive");
  for (int n : face_content)
    if (n < 0) throw TutteError("negative face content");

  int total_sides = std::accumulate(perimeters.begin(), perimeters.end(), 0);
  for (std::size_t i = 0; i < face_content.size(); ++i) total_sides += face_content[i] * static_cast<int>(i + 3);
  if (total_sides % 2 != 0) return {};
  if (total_sides / 2 > std::min(max_edges, 32)) throw TutteError("edge bound exceeded");

  Gluing gl;
  gl.kappa = static_cast<int>(perimeters.size());
  auto add_face = [&](int len) {
    int f = static_cast<int>(gl.first.size());
    int base = static_cast<int>(gl.face_of.size());
    gl.first.push_back(base);
    std::uint64_t mask = 0;
    for (int i = 0; i < len; ++i) {
      mask |= std::uint64_t{1} << (base + i);
      gl.face_of.push_back(f);
      gl.next.push_back(base + (i + 1) % len);
    }
    gl.sides.push_back(mask);
    return f;
  };
  for (int l : perimeters) add_face(l);
  gl.untouched.assign(face_content.size() + 3, {});
  std::int64_t symmetry = 1;
  for (std::size_t i = 0; i < face_content.size(); ++i) {
    int alpha = static_cast<int>(i) + 3;
    for (int n = 0; n < face_content[i]; ++n) {
      gl.untouched[static_cast<std::size_t>(alpha)].push_back(add_face(alpha));
      symmetry *= alpha * (n + 1);
    }
  }
  gl.faces = static_cast<int>(gl.first.size());
  gl.partner.assign(static_cast<std::size_t>(total_sides), -1);
  for (int f = 0; f < gl.kappa; ++f) gl.open |= gl.sides[static_cast<std::size_t>(f)];
  gl.untouched_total = gl.faces - gl.kappa;
  gl.search(1);
  for (auto& n : gl.by_genus) {
    if (n % symmetry != 0) throw std::logic_error("labeled count not divisible by the relabeling group");
    n /= symmetry;
  }
  return gl.by_genus;
}

std::int64_t brute_force_map_count(int genus, const std::vector<int>& perimeters,
                                   const std::vector<int>& face_content, int max_edges) {
  if (genus < 0) throw TutteError("negative genus");
  auto profile = brute_force_genus_profile(perimeters, face_content, max_edges);
  return static_cast<std::size_t>(genus) < profile.size() ? profile[static_cast<std::size_t>(genus)] : 0;
}

}  // namespace tgc
