// Acceptance gate: one self-contained check per shipped guarantee, each with a
// fixed seed and a wall-clock budget. Prints one PASS/FAIL line per criterion
// and exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "superpoly/coloring.hpp"
#include "superpoly/io.hpp"
#include "superpoly/oracles.hpp"
#include "superpoly/setcover.hpp"
#include "superpoly/solver.hpp"
#include "testutil.hpp"

using namespace superpoly;

namespace {

constexpr unsigned kSeedBase = 0xC0FFEE;

std::string offsets_to_string(const Layout& lay) {
  std::string out;
  for (const Offset& o : lay)
    out += "(" + std::to_string(o.dx) + "," + std::to_string(o.dy) + ") ";
  return out;
}

// 1. Vertex gadget sizes follow the closed form and stay inside the
//    [2n^2-(n-1), 2n^2] window. Budget 1s.
bool criterion1(std::string& note) {
  std::mt19937 rng(kSeedBase + 1);
  for (int trial = 0; trial < 20; ++trial) {
    int n = std::uniform_int_distribution<int>(3, 5)(rng);
    Graph g = testutil::random_graph(rng, n, 50);
    for (int v = 0; v < n; ++v) {
      int size = build_vertex_polyomino(g, v).size();
      if (size != vertex_poly_size(n, g.degree(v))) {
        note = "size formula mismatch at n=" + std::to_string(n);
        return false;
      }
      if (size < 2 * n * n - (n - 1) || size > 2 * n * n) {
        note = "size window violated at n=" + std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

// 2. Stacked vertex pieces are compatible exactly for independent pairs,
//    across every graph on 3 and on 4 vertices. Budget 10s.
bool criterion2(std::string& note) {
  for (int n : {3, 4}) {
    for (const Graph& g : testutil::graph_census(n)) {
      ColoringInstance ci = build_coloring_instance(g);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          bool fits = compatible(ci.instance.piece(u), ci.instance.piece(v), {0, 0});
          if (fits == g.adjacent(u, v)) {
            note = "pair (" + std::to_string(u) + "," + std::to_string(v) + ") on n=" +
                   std::to_string(n);
            return false;
          }
        }
      }
    }
  }
  return true;
}

// 3. The deck size threshold recovers the chromatic number: full censuses on
//    3 and 4 vertices plus 20 random 5-vertex graphs. Budget 2min.
bool criterion3(std::string& note) {
  std::mt19937 rng(kSeedBase + 3);
  auto check = [&](const Graph& g) {
    ColoringInstance ci = build_coloring_instance(g);
    int k = threshold_k(deck_solve(ci).size, g.n);
    return k == chromatic_number(g).k;
  };
  for (int n : {3, 4})
    for (const Graph& g : testutil::graph_census(n))
      if (!check(g)) {
        note = "census graph on " + std::to_string(n) + " vertices";
        return false;
      }
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testutil::random_graph(rng, 5, 50);
    if (!check(g)) {
      note = "random 5-vertex graph, trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// 4. The general contact-mode search agrees with the structured deck answer
//    on every 3-vertex graph. Budget 30min; disagreements are archived.
bool criterion4(std::string& note) {
  int index = 0;
  for (const Graph& g : testutil::graph_census(3)) {
    ColoringInstance ci = build_coloring_instance(g);
    SolveResult deck = deck_solve(ci);
    SolverConfig cfg;
    cfg.workers = 4;
    SolveResult exact = solve_exact(ci.instance, cfg);
    if (exact.size != deck.size || !exact.optimal) {
      std::ofstream out("acceptance_finding_c4.txt");
      out << "contact search and deck answer disagree\n";
      out << "graph index " << index << " of the 3-vertex census\n";
      out << emit_graph(g);
      out << "deck size " << deck.size << " at " << offsets_to_string(deck.layout) << "\n";
      out << "search size " << exact.size << " at " << offsets_to_string(exact.layout)
          << "\n";
      note = "graph " + std::to_string(index) + "; details in acceptance_finding_c4.txt";
      return false;
    }
    ++index;
  }
  return true;
}

// 5. Two-color blocks scale sizes by exactly 64, decode back, and keep the
//    threshold arithmetic intact on a 3-vertex instance. Budget 10s.
bool criterion5(std::string& note) {
  std::mt19937 rng(kSeedBase + 5);
  for (int trial = 0; trial < 30; ++trial) {
    Polyomino p = testutil::random_polyomino(rng, 12, 7);
    Polyomino big = to_two_color(p);
    if (big.size() != 64 * p.size()) {
      note = "scaling came out at " + std::to_string(big.size());
      return false;
    }
    if (!(from_two_color(big) == p)) {
      note = "round trip broke on trial " + std::to_string(trial);
      return false;
    }
  }

  Graph g(3, {{0, 1}, {0, 2}, {1, 2}});
  ColoringInstance ci = build_coloring_instance(g);
  SolveResult deck = deck_solve(ci);
  std::vector<std::pair<std::string, Polyomino>> scaled;
  for (int v = 0; v < g.n; ++v)
    scaled.emplace_back(ci.instance.name(v), to_two_color(ci.instance.piece(v)));
  Instance big(std::move(scaled));
  Layout lay = deck.layout;
  for (Offset& o : lay) o = {o.dx * 8, o.dy * 8};
  int scaled_size = evaluate_layout(big, lay);
  if (scaled_size != 64 * deck.size) {
    note = "scaled deck size " + std::to_string(scaled_size);
    return false;
  }
  int block = 128 * g.n * g.n;
  int k = (scaled_size + block - 1) / block;
  if (k != chromatic_number(g).k) {
    note = "scaled threshold gave k=" + std::to_string(k);
    return false;
  }
  return true;
}

// 6. The aligned setcover solver matches the cover oracle: the worked
//    4-element example exactly, then 20 random instances. Budget 1min.
bool criterion6(std::string& note) {
  SetCoverInstance fig4(4, {{1, 2}, {1, 4}, {2, 3, 4}, {2, 4}});
  auto [res, cover] = aligned_solve(fig4);
  CoverWitness oracle = min_set_cover(fig4);
  if (oracle.k != 2 || res.size != 169 || cover != std::vector<int>{1, 3}) {
    note = "worked example gave size " + std::to_string(res.size);
    return false;
  }

  std::mt19937 rng(kSeedBase + 6);
  for (int trial = 0; trial < 20; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    int m = std::uniform_int_distribution<int>(1, 5)(rng);
    SetCoverInstance sc = testutil::random_setcover(rng, n, m);
    auto [r, c] = aligned_solve(sc);
    if (static_cast<int>(c.size()) != min_set_cover(sc).k) {
      note = "random instance trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// 7. Exhaustive single-element sweep on the worked example: every placement
//    that is not rules-abiding costs at least |Pbar| + n cells. Budget 5min.
bool criterion7(std::string& note) {
  SetCoverInstance sc(4, {{1, 2}, {1, 4}, {2, 3, 4}, {2, 4}});
  int n = sc.n, m = sc.m();
  int pbar = build_set_polyomino(sc).poly.size();

  if (misalignment_size(sc, 1, {12, 0}) != 172) {
    note = "frozen off-rails value changed";
    return false;
  }

  int lo = -(3 * n + 2), hi = (n + 2) * m + 3 * n;
  for (int i = 1; i <= n; ++i) {
    for (int dy = lo; dy <= hi; ++dy) {
      for (int dx = lo; dx <= hi; ++dx) {
        bool rules = dy == 0 && dx >= 0 && dx % (n + 2) == 0 && dx / (n + 2) + 1 <= m &&
                     sc.contains(dx / (n + 2) + 1, i);
        int size = misalignment_size(sc, i, {dx, dy});
        if (rules && size != pbar + 1) {
          note = "aligned placement of element " + std::to_string(i) + " cost " +
                 std::to_string(size);
          return false;
        }
        if (!rules && size < pbar + n) {
          note = "element " + std::to_string(i) + " at (" + std::to_string(dx) + "," +
                 std::to_string(dy) + ") cost only " + std::to_string(size);
          return false;
        }
      }
    }
  }
  return true;
}

// 8. The exact searches agree with the reference enumeration, and greedy
//    never beats them, on 50 random tiny instances. Budget 5min.
bool criterion8(std::string& note) {
  std::mt19937 rng(kSeedBase + 8);
  for (int trial = 0; trial < 50; ++trial) {
    Instance inst = testutil::random_instance(rng, 3, 8, 2);
    SolveResult brute = solve_brute(inst);
    SolveResult contact = solve_exact(inst);
    SolverConfig scfg;
    scfg.mode = SolveMode::ExactSteiner;
    SolveResult steiner = solve_exact(inst, scfg);
    SolveResult greedy = solve_greedy(inst);
    if (contact.size != brute.size) {
      note = "contact " + std::to_string(contact.size) + " vs brute " +
             std::to_string(brute.size) + " on trial " + std::to_string(trial);
      return false;
    }
    if (steiner.size != contact.size) {
      note = "steiner " + std::to_string(steiner.size) + " vs contact " +
             std::to_string(contact.size) + " on trial " + std::to_string(trial);
      return false;
    }
    if (greedy.size < contact.size) {
      note = "greedy undercut the optimum on trial " + std::to_string(trial);
      return false;
    }
    if (evaluate_layout(inst, contact.layout) != contact.size) {
      note = "contact layout does not realize its size on trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// 9. One-row instances: the single-color fast path equals the enumeration,
//    and greedy stays within 3x of it on multicolor strips. Budget 1min.
bool criterion9(std::string& note) {
  std::mt19937 rng(kSeedBase + 9);
  for (int trial = 0; trial < 20; ++trial) {
    int count = std::uniform_int_distribution<int>(2, 4)(rng);
    Instance inst = testutil::strip_instance(rng, count, 5, 1);
    if (solve_line_single_color(inst).size != solve_brute(inst).size) {
      note = "single-color strip trial " + std::to_string(trial);
      return false;
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    int count = std::uniform_int_distribution<int>(2, 4)(rng);
    Instance inst = testutil::strip_instance(rng, count, 5, 3);
    int best = solve_brute(inst).size;
    int greedy = solve_greedy(inst).size;
    if (greedy > 3 * best) {
      note = "greedy " + std::to_string(greedy) + " vs best " + std::to_string(best) +
             " on trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

// 10. Algebraic properties of the core relations, 100+ random cases each.
//     Budget 30s.
bool criterion10(std::string& note) {
  std::mt19937 rng(kSeedBase + 10);
  std::uniform_int_distribution<int> small(-6, 6);

  for (int trial = 0; trial < 120; ++trial) {
    Polyomino pu = testutil::random_polyomino(rng, 10, 3);
    Polyomino pv = testutil::random_polyomino(rng, 10, 3);
    Offset o{small(rng), small(rng)};

    // compatibility is symmetric under flipping the frame
    if (compatible(pu, pv, o) != compatible(pv, pu, -o)) {
      note = "compatibility symmetry, trial " + std::to_string(trial);
      return false;
    }

    if (compatible(pu, pv, o)) {
      // the merge has |pu| + |pv| - shared cells, and the same cells seen
      // from either frame
      CellCluster ab = superimpose(pu, pv, o);
      CellCluster ba = superimpose(pv, pu, -o);
      int shared = 0;
      for (const auto& [c, color] : pv.cells())
        if (pu.color_at(c + o) >= 0) ++shared;
      if (static_cast<int>(ab.size()) != pu.size() + pv.size() - shared) {
        note = "merge size arithmetic, trial " + std::to_string(trial);
        return false;
      }
      bool same = ab.size() == ba.size();
      for (const auto& [c, color] : ba) {
        auto it = ab.find(c + o);
        if (it == ab.end() || it->second != color) same = false;
      }
      if (!same) {
        note = "merge frame shift, trial " + std::to_string(trial);
        return false;
      }
    }

    // self-embedding is exactly the identity offset
    auto self = is_superpolyomino(pu, pu);
    if (self.size() != 1 || !(self[0] == Offset{0, 0})) {
      note = "self embedding, trial " + std::to_string(trial);
      return false;
    }

    // embeddings compose: sub-sub-shapes embed through the middle shape
    Polyomino q = testutil::random_subshape(rng, pu);
    Polyomino r = testutil::random_subshape(rng, q);
    auto qp = is_superpolyomino(pu, q);
    auto rq = is_superpolyomino(q, r);
    auto rp = is_superpolyomino(pu, r);
    if (qp.empty() || rq.empty()) {
      note = "subshape embedding missing, trial " + std::to_string(trial);
      return false;
    }
    Offset through = qp.front() + rq.front();
    bool listed = false;
    for (const Offset& cand : rp)
      if (cand == through) listed = true;
    if (!listed) {
      note = "embedding composition, trial " + std::to_string(trial);
      return false;
    }

    // max overlap is symmetric in its count and certified by its offset
    auto [ouv, cuv] = max_overlap(pu, pv);
    auto [ovu, cvu] = max_overlap(pv, pu);
    if (cuv != cvu) {
      note = "overlap count symmetry, trial " + std::to_string(trial);
      return false;
    }
    if (!compatible(pu, pv, ouv)) {
      note = "overlap offset not compatible, trial " + std::to_string(trial);
      return false;
    }
    int recount = 0;
    for (const auto& [c, color] : pv.cells())
      if (pu.color_at(c + ouv) >= 0) ++recount;
    if (recount != cuv) {
      note = "overlap count certificate, trial " + std::to_string(trial);
      return false;
    }
  }

  // union sizes ignore global translation
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = testutil::random_instance(rng, 3, 6, 2);
    Layout lay = solve_greedy(inst).layout;
    int base = evaluate_layout(inst, lay);
    Offset shift{small(rng), small(rng)};
    for (Offset& o : lay) o = o + shift;
    if (evaluate_layout(inst, lay) != base) {
      note = "translation invariance, trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "vertex gadget sizes match the closed form", 1.0, criterion1},
      {2, "stacking compatibility mirrors independence", 10.0, criterion2},
      {3, "deck threshold recovers the chromatic number", 120.0, criterion3},
      {4, "contact search agrees with the deck optimum", 1800.0, criterion4},
      {5, "two-color blocks scale, decode, and keep thresholds", 10.0, criterion5},
      {6, "aligned solver matches the cover oracle", 60.0, criterion6},
      {7, "off-rails element placements are expensive", 300.0, criterion7},
      {8, "exact modes agree with the reference enumeration", 300.0, criterion8},
      {9, "one-row fast path and greedy bounds hold", 60.0, criterion9},
      {10, "relation algebra holds on random shapes", 30.0, criterion10},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && sec > c.budget_seconds) {
      ok = false;
      detail = "over budget (" + std::to_string(c.budget_seconds) + "s)";
    }
    std::printf("criterion %2d: %s (%6.2fs) %s%s%s\n", c.id, ok ? "PASS" : "FAIL", sec,
                c.label, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    all = all && ok;
  }
  return all ? 0 : 1;
}
