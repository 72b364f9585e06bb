#pragma once

// Closure components and linking numbers recomputed by scanning the word
// backwards from the final strand arrangement.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace oracle {

struct BraidClosure {
  // start position (0-based) -> component id (smallest start position, 1-based)
  std::vector<int> component_of;
  // doubled linking number between components, indexed by component id
  std::vector<std::vector<std::int64_t>> doubled;
};

inline BraidClosure braid_closure(int strands, const std::vector<int>& word) {
  // at[k] = start position of the strand currently at position k
  std::vector<int> at(strands);
  std::iota(at.begin(), at.end(), 0);
  for (int s : word) {
    const int i = std::abs(s);
    std::swap(at[i - 1], at[i]);
  }
  // Union starts along the closure: position k at the bottom feeds start k.
  std::vector<int> parent(strands);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int k = 0; k < strands; ++k) {
    const int a = find(at[k]);
    const int b = find(k);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  BraidClosure out;
  out.component_of.resize(strands);
  for (int k = 0; k < strands; ++k) out.component_of[k] = find(k) + 1;
  out.doubled.assign(strands + 1, std::vector<std::int64_t>(strands + 1, 0));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = std::abs(*it);
    const int sign = *it > 0 ? 1 : -1;
    const int a = out.component_of[at[i - 1]];
    const int b = out.component_of[at[i]];
    if (a != b) {
      out.doubled[a][b] += sign;
      out.doubled[b][a] += sign;
    }
    std::swap(at[i - 1], at[i]);
  }
  return out;
}

} // namespace oracle
