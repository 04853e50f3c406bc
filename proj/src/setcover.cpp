#include "superpoly/setcover.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdint>
#include <set>
#include <string>

namespace superpoly {

SetCoverInstance::SetCoverInstance(int universe, std::vector<std::vector<int>> set_list)
    : n(universe), sets(std::move(set_list)) {
  if (n < 1) throw Error("the universe needs at least one element");
  if (sets.empty()) throw Error("a set cover instance needs at least one set");
  std::vector<char> covered(n + 1, 0);
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int e : s) {
      if (e < 1 || e > n)
        throw ElementOutOfRangeError("element " + std::to_string(e) + " is outside 1.." +
                                     std::to_string(n));
      covered[e] = 1;
    }
  }
  for (int e = 1; e <= n; ++e)
    if (!covered[e])
      throw Error("element " + std::to_string(e) + " is not a member of any set");
}

bool SetCoverInstance::contains(int set_index, int element) const {
  if (set_index < 1 || set_index > m()) return false;
  const auto& s = sets[set_index - 1];
  return std::binary_search(s.begin(), s.end(), element);
}

ElementPolyomino build_element_polyomino(int n, int i) {
  if (n < 1) throw Error("the universe needs at least one element");
  if (i < 1 || i > n)
    throw ElementOutOfRangeError("element " + std::to_string(i) + " is outside 1.." +
                                 std::to_string(n));
  CellCluster cells;
  for (int y = 0; y <= n; ++y)
    for (int x = 0; x <= n; ++x) cells[{x, y}] = kGray;  // base square
  for (int y = n; y <= 3 * n; ++y) cells[{0, y}] = kGray;  // pole
  for (int x = 1; x <= n; ++x) cells[{x, n + 2 * i}] = kGray;  // flag row
  return ElementPolyomino{i, make_polyomino(cells)};
}

SetPolyomino build_set_polyomino(const SetCoverInstance& sc) {
  int n = sc.n, m = sc.m();
  CellCluster cells;
  for (int j = 1; j <= m; ++j) {
    int x0 = (n + 2) * (j - 1);
    for (int y = 0; y <= n; ++y)
      for (int x = x0; x <= x0 + n; ++x) cells[{x, y}] = kGray;
    cells.erase({x0 + 1, 1});  // puncture: only an aligned element fills it
    for (int y = n; y <= 3 * n; ++y) cells[{x0, y}] = kGray;
    for (int e : sc.sets[j - 1])
      for (int x = x0 + 1; x <= x0 + n; ++x) cells[{x, n + 2 * e}] = kGray;
  }
  for (int j = 1; j < m; ++j) cells[{(n + 2) * j - 1, 0}] = kGray;  // connectors
  return SetPolyomino{make_polyomino(cells), n, m};
}

Instance build_setcover_instance(const SetCoverInstance& sc) {
  std::vector<std::pair<std::string, Polyomino>> pieces;
  pieces.emplace_back("Pbar", build_set_polyomino(sc).poly);
  for (int i = 1; i <= sc.n; ++i)
    pieces.emplace_back("P" + std::to_string(i), build_element_polyomino(sc.n, i).poly);
  return Instance(std::move(pieces));
}

Layout aligned_layout(const SetCoverInstance& sc, const AlignmentAssignment& assignment) {
  int n = sc.n, m = sc.m();
  if (static_cast<int>(assignment.size()) != n)
    throw PreconditionViolatedError("assignment must name a set for every element");
  Layout lay(n + 1);
  lay[0] = {0, 0};
  for (int i = 1; i <= n; ++i) {
    int j = assignment[i - 1];
    if (j < 1 || j > m || !sc.contains(j, i))
      throw NotRulesAbidingError("element " + std::to_string(i) +
                                 " is not assigned to a set containing it");
    lay[i] = {(n + 2) * (j - 1), 0};
  }
  return lay;
}

std::pair<SolveResult, std::vector<int>> aligned_solve(const SetCoverInstance& sc) {
  int n = sc.n, m = sc.m();
  if (n > 12 || m > 12)
    throw TooLargeError("aligned_solve tabulates set masks; 12 elements and 12 sets max");
  auto start = std::chrono::steady_clock::now();

  std::vector<std::vector<int>> owners(n + 1);  // sets containing each element
  for (int j = 1; j <= m; ++j)
    for (int e : sc.sets[j - 1]) owners[e].push_back(j);

  // f[i][mask]: distinct new sets needed to align elements i+1..n when the
  // sets in mask are already in use
  const int full = 1 << m;
  const int UNSET = INT_MAX;
  std::vector<std::vector<int>> f(n + 1, std::vector<int>(full, UNSET));
  std::uint64_t nodes = 0;

  auto solve = [&](auto&& self, int i, int mask) -> int {
    int& memo = f[i][mask];
    if (memo != UNSET) return memo;
    ++nodes;
    if (i == n) return memo = 0;
    int best = INT_MAX / 2;
    for (int j : owners[i + 1]) {
      int bit = 1 << (j - 1);
      int cost = (mask & bit) ? 0 : 1;
      best = std::min(best, cost + self(self, i + 1, mask | bit));
    }
    return memo = best;
  };
  solve(solve, 0, 0);

  // canonical reconstruction: smallest set index achieving the optimum
  AlignmentAssignment assignment(n);
  int mask = 0;
  for (int i = 0; i < n; ++i) {
    for (int j : owners[i + 1]) {
      int bit = 1 << (j - 1);
      int cost = (mask & bit) ? 0 : 1;
      if (cost + solve(solve, i + 1, mask | bit) == f[i][mask]) {
        assignment[i] = j;
        mask |= bit;
        break;
      }
    }
  }

  std::vector<int> cover;
  for (int j = 1; j <= m; ++j)
    if (mask & (1 << (j - 1))) cover.push_back(j);

  SolveResult res;
  res.layout = aligned_layout(sc, assignment);
  res.size = build_set_polyomino(sc).poly.size() + static_cast<int>(cover.size());
  res.optimal = true;
  res.stats.nodes = nodes;
  res.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {res, cover};
}

std::vector<int> extract_cover(const SetCoverInstance& sc, const Layout& lay) {
  int n = sc.n, m = sc.m();
  if (static_cast<int>(lay.size()) != n + 1)
    throw PreconditionViolatedError("layout must cover the set piece and every element piece");

  std::set<int> used;
  for (int i = 1; i <= n; ++i) {
    Offset rel = lay[i] - lay[0];
    int j = rel.dx / (n + 2) + 1;
    if (rel.dy != 0 || rel.dx < 0 || rel.dx % (n + 2) != 0 || j > m)
      throw MisalignedElementError("element " + std::to_string(i) +
                                       " does not sit on a gadget base",
                                   i, rel);
    if (!sc.contains(j, i))
      throw WrongSetError("element " + std::to_string(i) + " sits on set " + std::to_string(j) +
                              " which does not contain it",
                          i, j);
    used.insert(j);
  }
  return std::vector<int>(used.begin(), used.end());
}

int misalignment_size(const SetCoverInstance& sc, int element, Offset offset) {
  Polyomino pbar = build_set_polyomino(sc).poly;
  Polyomino pe = build_element_polyomino(sc.n, element).poly;
  int overlap = 0;
  for (const auto& [c, color] : pe.cells())
    if (pbar.color_at(c.x + offset.dx, c.y + offset.dy) >= 0) ++overlap;
  return pbar.size() + pe.size() - overlap;
}

}  // namespace superpoly
