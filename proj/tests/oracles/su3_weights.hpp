#pragma once

// Weight multiplicities of the SU(3) irrep (p, q) built from tensor powers:
// Sym^p(3) x Sym^q(3bar) = (p, q) + Sym^(p-1)(3) x Sym^(q-1)(3bar),
// so the weights of (p, q) are a multiset difference. Isospin content is
// then read off by peeling I3 towers, highest first.

#include <map>
#include <utility>
#include <vector>

namespace oracle {

/// Weight as (2 I3, 3 Y).
using Weight = std::pair<int, int>;
using WeightCount = std::map<Weight, long>;

inline WeightCount symmetric_power(int n, bool conjugate) {
  // u, d, s in (2 I3, 3 Y)
  const Weight quarks[3] = {{1, 1}, {-1, 1}, {0, -2}};
  WeightCount out;
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; a + b <= n; ++b) {
      const int c = n - a - b;
      int i3 = a * quarks[0].first + b * quarks[1].first + c * quarks[2].first;
      int y = a * quarks[0].second + b * quarks[1].second + c * quarks[2].second;
      if (conjugate) {
        i3 = -i3;
        y = -y;
      }
      out[{i3, y}] += 1;
    }
  }
  return out;
}

inline WeightCount product(const WeightCount& a, const WeightCount& b) {
  WeightCount out;
  for (const auto& [wa, na] : a)
    for (const auto& [wb, nb] : b) out[{wa.first + wb.first, wa.second + wb.second}] += na * nb;
  return out;
}

inline WeightCount irrep_weights(int p, int q) {
  WeightCount full = product(symmetric_power(p, false), symmetric_power(q, true));
  if (p > 0 && q > 0) {
    for (const auto& [w, n] : product(symmetric_power(p - 1, false), symmetric_power(q - 1, true))) full[w] -= n;
  }
  WeightCount out;
  for (const auto& [w, n] : full)
    if (n != 0) out[w] = n;
  return out;
}

/// three_y -> list of (2I, multiplicity), 2I descending.
inline std::map<int, std::vector<std::pair<int, long>>> isospin_content(const WeightCount& weights) {
  std::map<int, std::map<int, long>> by_y;
  for (const auto& [w, n] : weights) by_y[w.second][w.first] += n;
  std::map<int, std::vector<std::pair<int, long>>> out;
  for (auto& [y, counts] : by_y) {
    std::vector<std::pair<int, long>> multiplets;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
      const int two_i3 = it->first;
      if (two_i3 < 0) break;
      const auto above = counts.find(two_i3 + 2);
      const long mult = it->second - (above == counts.end() ? 0 : above->second);
      if (mult > 0) multiplets.emplace_back(two_i3, mult);
    }
    out[y] = multiplets;
  }
  return out;
}

}  // namespace oracle
