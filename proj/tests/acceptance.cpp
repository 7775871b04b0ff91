// One PASS/FAIL line per acceptance criterion; exit status is non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles/calculus_cases.hpp"
#include "oracles/orbit_examples.hpp"
#include "tgc/catalog.hpp"
#include "tgc/fixtures.hpp"
#include "tgc/sde.hpp"
#include "tgc/tutte.hpp"

using namespace tgc;

namespace {

constexpr double kFixtureSeconds = 5.0;
constexpr int kCalculusCases = 200;
constexpr double kClosedFormTolerance = 1e-12;
constexpr int kTutteMaxEdges = 12;
constexpr double kTutteSeconds = 60.0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

Outcome golden_fixtures() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  int passed = 0, total = 0;
  std::string failed;
  for (const auto& f : load_all_fixtures()) {
    ++total;
    if (verify_fixture(f).ok())
      ++passed;
    else
      failed += " " + f.name;
  }
  const double dt = seconds_since(t0);
  o.ok = total == 4 && passed == total && dt < kFixtureSeconds;
  o.detail = std::to_string(passed) + "/" + std::to_string(total) + " fixtures in " + fmt_seconds(dt);
  if (!failed.empty()) o.detail += "; failing:" + failed;
  return o;
}

Outcome automorphism_counts() {
  const std::vector<std::pair<std::string, std::size_t>> want{
      {"m", 1}, {"V1", 2}, {"V2", 2}, {"V3", 2}, {"K33", 3}, {"m|m", 2}, {"m|m|m", 6}, {"m|m|V1|V1|K33", 48}};
  Outcome o;
  for (const auto& [w, n] : want) {
    const std::size_t got = automorphism_count(disjoint_union(parse_word(w), 3));
    if (got != n) {
      o.ok = false;
      o.detail += w + "=" + std::to_string(got) + " ";
    }
  }
  if (o.ok) o.detail = std::to_string(want.size()) + " words";
  return o;
}

Outcome bridge_and_swap() {
  Outcome o;
  auto fail = [&](const std::string& why) {
    o.ok = false;
    o.detail += why + "; ";
  };
  const auto k33 = find_entry(3, "K33")->graph;
  for (int b = 0; b < 3; ++b)
    for (int c = 1; c <= 3; ++c)
      if (!bridge_pairs(k33, b, c).empty()) fail("K33 has a 2-bridge");
  for (int a = 1; a <= 3; ++a) {
    const auto v = find_entry(3, "V" + std::to_string(a))->graph;
    for (int b = 0; b < 2; ++b)
      for (int c = 1; c <= 3; ++c) {
        auto br = bridge_pairs(v, b, c);
        const std::vector<int> want = c == a ? std::vector<int>{1 - b} : std::vector<int>{};
        if (br != want) fail("V" + std::to_string(a) + " bridges at colour " + std::to_string(c));
      }
  }
  const auto swapped = edge_swap(find_entry(3, "V1")->graph, 1, 0, 1);
  if (canonical_code(swapped) != canonical_code(disjoint_union(parse_word("m|m"), 3))) fail("swap of V1 is not m|m");
  if (o.ok) o.detail = "K33, V1-V3 bridge sets and the V1 colour-1 swap";
  return o;
}

Outcome calculus_lemmas() {
  Outcome o;
  int leibniz = 0, borel = 0, multinomial = 0;
  for (int i = 1; i <= kCalculusCases; ++i) {
    auto r = oracle::leibniz_case(static_cast<std::uint64_t>(i));
    if (r.ok)
      ++leibniz;
    else if (o.ok) {
      o.ok = false;
      o.detail += "leibniz " + r.detail + "; ";
    }
  }
  for (int i = 1; i <= kCalculusCases / 4; ++i) {
    auto r = oracle::borel_case(static_cast<std::uint64_t>(1000 + i));
    if (r.ok)
      ++borel;
    else {
      o.ok = false;
      o.detail += "borel " + r.detail + "; ";
    }
    auto m = oracle::multinomial_case(static_cast<std::uint64_t>(2000 + i));
    if (m.ok)
      ++multinomial;
    else {
      o.ok = false;
      o.detail += "multinomial " + m.detail + "; ";
    }
  }
  auto w = oracle::wreath_order_identity(6);
  if (!w.ok) {
    o.ok = false;
    o.detail += "wreath order " + w.detail + "; ";
  }
  std::ostringstream s;
  s << "leibniz " << leibniz << "/" << kCalculusCases << ", borel " << borel << "/" << kCalculusCases / 4
    << ", multinomial " << multinomial << "/" << kCalculusCases / 4 << ", wreath order " << w.detail;
  o.detail = s.str() + (o.ok ? "" : " | " + o.detail);
  return o;
}

Outcome group_examples() {
  using namespace oracle;
  Outcome o;
  std::vector<std::string> notes;

  bool roots = true;
  for (int n = 2; n <= 12; ++n) {
    Cyclotomic id_sum = rational_in(n, 0), pow_sum = rational_in(n, 0);
    const Rational z = make_rational(3, 5);
    Rational zn = 1;
    for (int i = 0; i < n; ++i) zn *= z;
    for (int k = 0; k < n; ++k) {
      Cyclotomic moved = zeta_power(n, k) * rational_in(n, z);
      id_sum += moved;
      Cyclotomic p = rational_in(n, 1);
      for (int i = 0; i < n; ++i) p = p * moved;
      pow_sum += p;
    }
    roots = roots && id_sum.is_zero() && pow_sum.value == Poly{Rational(n) * zn};
  }
  notes.push_back(std::string("roots of unity ") + (roots ? "ok" : "FAILED"));

  bool det = true;
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; n += 2) {
    Matrix x(n, std::vector<Rational>(n));
    for (auto& row : x)
      for (auto& v : row) v = make_rational(static_cast<long>(rng() % 19) - 9, 1 + rng() % 4);
    Rational s = 0;
    for (const auto& sigma : all_perms(n)) s += determinant(permute_rows(x, sigma));
    det = det && s == 0;
  }
  notes.push_back(std::string("determinant orbit ") + (det ? "ok" : "FAILED"));

  bool chars = true;
  const auto k = quaternion_group();
  for (const auto& m : k)
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        long s = 0;
        for (const auto& u : k) {
          const int cls = quaternion_class(mat_mul(u, m));
          s += quaternion_character(i, cls) * quaternion_character(j, cls);
        }
        chars = chars && s == (i == j ? static_cast<long>(k.size()) : 0L);
      }
  notes.push_back(std::string("Q8 characters ") + (chars ? "ok" : "FAILED"));

  double err_plus = 0, err_minus = 0, err_unsigned = 0;
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int d = 1; d <= 4; ++d)
    for (int trial = 0; trial < 25; ++trial) {
      WreathSample s{RealVec(d), RealVec(d), trial % 2 ? -1 : 1};
      for (auto& v : s.z1) v = u(rng);
      for (auto& v : s.z2) v = u(rng);
      const double orbit = wreath_orbit_sum(s);
      const double e = std::abs(orbit - wreath_closed_form_signed(s));
      (s.eps == 1 ? err_plus : err_minus) = std::max(s.eps == 1 ? err_plus : err_minus, e);
      err_unsigned = std::max(err_unsigned, std::abs(orbit - wreath_closed_form(s)));
    }
  const bool signed_ok = err_plus <= kClosedFormTolerance && err_minus <= kClosedFormTolerance;
  char buf[200];
  std::snprintf(buf, sizeof buf, "S(D)^2 signed closed form max err %.1e (eps=+1) / %.1e (eps=-1); without the eps factor %.1e",
                err_plus, err_minus, err_unsigned);
  notes.push_back(buf);

  o.ok = roots && det && chars && signed_ok;
  for (std::size_t i = 0; i < notes.size(); ++i) o.detail += (i ? ", " : "") + notes[i];
  return o;
}

Outcome tutte_and_orbits() {
  Outcome o;
  const int order = 8;
  auto t0 = std::chrono::steady_clock::now();
  GenFunTable table(order, 4);
  std::size_t compared = 0, mismatches = 0;
  std::string first_bad;
  const std::vector<std::vector<int>> boundaries{{1}, {2}, {3}, {4}, {1, 1}, {1, 2}, {1, 3}, {2, 2}};
  for (const auto& p : boundaries) {
    int total = 0;
    for (int l : p) total += l;
    for (int n3 = 0; 2 * kTutteMaxEdges >= total + 3 * n3; ++n3)
      for (int n4 = 0; 2 * kTutteMaxEdges >= total + 3 * n3 + 4 * n4; ++n4) {
        const int sides = total + 3 * n3 + 4 * n4;
        if (sides % 2) continue;
        std::vector<int> content{n3, n4};
        std::vector<std::int64_t> profile;
        for (int g = 0;; ++g) {
          const int v = vertex_count(g, p, content);
          if (v < 0) break;
          if (v > order) continue;
          if (profile.empty()) profile = brute_force_genus_profile(p, content, kTutteMaxEdges);
          const std::int64_t want = g < static_cast<int>(profile.size()) ? profile[g] : 0;
          ++compared;
          if (table.get(g, p).coefficient({v, n3, n4}) != want) {
            ++mismatches;
            if (first_bad.empty()) first_bad = "g=" + std::to_string(g) + " n3=" + std::to_string(n3) + " n4=" + std::to_string(n4);
          }
        }
      }
  }
  const double tutte_dt = seconds_since(t0);

  auto t1 = std::chrono::steady_clock::now();
  std::size_t words = 0, invariant = 0;
  for (const auto& w : enumerate_boundaries(3, 6)) {
    ++words;
    invariant += beta_orbit_invariant(w);
  }
  const double orbit_dt = seconds_since(t1);

  o.ok = mismatches == 0 && tutte_dt <= kTutteSeconds && invariant == words;
  o.detail = std::to_string(compared - mismatches) + "/" + std::to_string(compared) + " Tutte coefficients (<= " +
             std::to_string(kTutteMaxEdges) + " edges) in " + fmt_seconds(tutte_dt) + ", beta-orbit invariance " +
             std::to_string(invariant) + "/" + std::to_string(words) + " words in " + fmt_seconds(orbit_dt);
  if (!first_bad.empty()) o.detail += "; first mismatch " + first_bad;
  return o;
}

Outcome enumeration_sanity() {
  Outcome o;
  const auto four = connected_classes(3, 2);
  const auto two = connected_classes(3, 1);
  o.ok = four.size() == 3 && two.size() == 1 && isomorphic(two[0], melon(3));
  for (const auto& g : four) o.ok = o.ok && class_name(g).rfind("V", 0) == 0;
  o.detail = std::to_string(four.size()) + " four-vertex classes, " + std::to_string(two.size()) + " two-vertex class";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden SDE fixtures", golden_fixtures},
      {"automorphism counts", automorphism_counts},
      {"bridge and swap facts", bridge_and_swap},
      {"graph-calculus lemmas", calculus_lemmas},
      {"group-orbit example fixtures", group_examples},
      {"Tutte oracle and beta-orbit invariance", tutte_and_orbits},
      {"enumeration sanity", enumeration_sanity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
