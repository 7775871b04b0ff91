#pragma once

// Plain (2E-1)!! enumeration of side pairings. Polygons are labeled and rooted here,
// so each unlabeled map is hit prod(n_a! * a^n_a) times.

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

struct PairingCounts {
  std::vector<std::int64_t> by_genus;  // raw pairings, connected only
  std::int64_t relabelings = 1;
};

inline PairingCounts count_pairings(const std::vector<int>& perimeters, const std::vector<int>& face_content) {
  std::vector<int> sizes = perimeters;
  PairingCounts out;
  for (std::size_t i = 0; i < face_content.size(); ++i) {
    const int a = static_cast<int>(i) + 3;
    for (int j = 0; j < face_content[i]; ++j) {
      sizes.push_back(a);
      out.relabelings *= (j + 1) * a;
    }
  }
  std::vector<int> face_of, next;
  for (int f = 0; f < static_cast<int>(sizes.size()); ++f) {
    const int base = static_cast<int>(face_of.size());
    for (int j = 0; j < sizes[f]; ++j) {
      face_of.push_back(f);
      next.push_back(base + (j + 1) % sizes[f]);
    }
  }
  const int n = static_cast<int>(face_of.size());
  const int faces = static_cast<int>(sizes.size());
  if (n % 2) return out;
  std::vector<int> mate(n, -1);

  auto tally = [&]() {
    std::vector<int> root(faces);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    for (int s = 0; s < n; ++s) root[find(face_of[s])] = find(face_of[mate[s]]);
    for (int f = 0; f < faces; ++f)
      if (find(f) != find(0)) return;
    std::vector<char> seen(n, 0);
    int vertices = 0;
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      ++vertices;
      for (int x = s; !seen[x]; x = next[mate[x]]) seen[x] = 1;
    }
    const int chi = vertices - n / 2 + faces;
    const int g = (2 - chi) / 2;
    if (static_cast<int>(out.by_genus.size()) <= g) out.by_genus.resize(g + 1, 0);
    ++out.by_genus[g];
  };

  std::function<void()> rec = [&]() {
    int s = 0;
    while (s < n && mate[s] >= 0) ++s;
    if (s == n) {
      tally();
      return;
    }
    for (int t = s + 1; t < n; ++t) {
      if (mate[t] >= 0) continue;
      mate[s] = t;
      mate[t] = s;
      rec();
      mate[s] = mate[t] = -1;
    }
  };
  rec();
  return out;
}

// Unlabeled count of genus-g maps; rooted marked faces make the relabeling action free.
inline std::int64_t map_count(int genus, const std::vector<int>& perimeters, const std::vector<int>& face_content) {
  auto c = count_pairings(perimeters, face_content);
  if (genus >= static_cast<int>(c.by_genus.size())) return 0;
  const std::int64_t raw = c.by_genus[genus];
  if (raw % c.relabelings != 0) throw std::logic_error("relabeling action is not free");
  return raw / c.relabelings;
}

}  // namespace oracle
