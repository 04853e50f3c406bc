#include "superpoly/oracles.hpp"

#include <cstdint>
#include <numeric>
#include <string>

namespace superpoly {

ColoringWitness chromatic_number(const Graph& g) {
  int n = g.n;
  if (n > 10) throw TooManyVerticesError("chromatic_number is exhaustive; 10 vertices max");

  std::vector<int> color(n, -1);
  auto feasible = [&](auto&& self, int v, int k) -> bool {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (color[u] == c && g.adjacent(u, v)) ok = false;
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1, k)) return true;
      color[v] = -1;
    }
    return false;
  };

  for (int k = 1; k <= n; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (feasible(feasible, 0, k)) {
      ColoringWitness w;
      w.k = k;
      w.classes.assign(k, {});
      for (int v = 0; v < n; ++v) w.classes[color[v]].push_back(v);
      return w;
    }
  }
  throw Error("internal: no coloring found with n colors");
}

CoverWitness min_set_cover(const SetCoverInstance& sc) {
  int n = sc.n, m = sc.m();
  if (m > 20 || n > 64)
    throw TooLargeError("min_set_cover is exhaustive; 20 sets and 64 elements max");

  std::uint64_t universe = n == 64 ? ~0ull : (1ull << n) - 1;
  std::vector<std::uint64_t> mask(m, 0);
  for (int j = 0; j < m; ++j)
    for (int e : sc.sets[j]) mask[j] |= 1ull << (e - 1);

  std::vector<int> pick;
  auto search = [&](auto&& self, int next, int remaining, std::uint64_t covered) -> bool {
    if (covered == universe) return remaining == 0;
    if (remaining == 0) return false;
    // still lexicographic: extend with each later set in order
    for (int j = next; j <= m - remaining; ++j) {
      pick.push_back(j + 1);
      if (self(self, j + 1, remaining - 1, covered | mask[j])) return true;
      pick.pop_back();
    }
    return false;
  };

  for (int k = 0; k <= m; ++k) {
    pick.clear();
    if (search(search, 0, k, 0)) return CoverWitness{k, pick};
  }
  throw Error("internal: full set family failed to cover");
}

int vertex_poly_size(int vertex_count, int degree) {
  return 2 * vertex_count * vertex_count - (vertex_count - 1 - degree);
}

int element_poly_size(int n) { return n * n + 5 * n + 1; }

int set_poly_size(const SetCoverInstance& sc) {
  int n = sc.n, m = sc.m();
  int members = 0;
  for (const auto& s : sc.sets) members += static_cast<int>(s.size());
  return m * (n * n + 4 * n) + n * members + (m - 1);
}

}  // namespace superpoly
