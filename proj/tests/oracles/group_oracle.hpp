#pragma once

// Brute-force arithmetic in (Z_m)^n: spans, cosets and quotient classes by
// explicit enumeration. Only for tiny groups.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline Vec reduce(Vec v, std::int64_t m) {
  for (auto& x : v) x = ((x % m) + m) % m;
  return v;
}

// Closure of {0} under adding the generators, mod m.
inline std::set<Vec> span_mod(std::size_t n, std::int64_t m, const std::vector<Vec>& gens) {
  std::set<Vec> seen{Vec(n, 0)};
  std::vector<Vec> frontier{Vec(n, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        Vec w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = v[i] + g[i];
        w = reduce(w, m);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Whether e lies in <gens> inside (Z_m)^n / <relations>.
inline bool member_mod(std::size_t n, std::int64_t m, const std::vector<Vec>& relations, const std::vector<Vec>& gens,
                       const Vec& e) {
  auto all = relations;
  all.insert(all.end(), gens.begin(), gens.end());
  return span_mod(n, m, all).count(reduce(e, m)) > 0;
}

// Smallest vector of the coset e + <relations>, a canonical class label.
inline Vec class_label(std::size_t n, std::int64_t m, const std::vector<Vec>& relations, const Vec& e) {
  const auto rel = span_mod(n, m, relations);
  Vec best;
  bool first = true;
  for (const auto& r : rel) {
    Vec w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = e[i] + r[i];
    w = reduce(w, m);
    if (first || w < best) best = w;
    first = false;
  }
  return best;
}

} // namespace oracle
