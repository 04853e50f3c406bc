#include <random>

#include "doctest.h"
#include "superpoly/io.hpp"
#include "superpoly/solver.hpp"
#include "testutil.hpp"

using namespace superpoly;

namespace {

Instance named(std::vector<std::string> grids) {
  std::vector<std::pair<std::string, Polyomino>> pieces;
  for (std::size_t i = 0; i < grids.size(); ++i)
    pieces.emplace_back("p" + std::to_string(i), parse_polyomino(grids[i]));
  return Instance(std::move(pieces));
}

}  // namespace

TEST_CASE("a single piece is its own smallest container") {
  Instance inst = named({"gg\ng.\n"});
  SolveResult r = solve_exact(inst);
  CHECK(r.size == 3);
  CHECK(r.optimal);
  CHECK(r.layout == Layout{{0, 0}});
  CHECK(solve_brute(inst).size == 3);
  CHECK(solve_greedy(inst).size == 3);
}

TEST_CASE("identical pieces collapse onto each other") {
  Instance inst = named({"gr\n", "gr\n", "gr\n"});
  CHECK(solve_exact(inst).size == 2);
  CHECK(solve_brute(inst).size == 2);
  CHECK(solve_greedy(inst).size == 2);
}

TEST_CASE("conflicting colors force the pieces apart") {
  Instance inst = named({"g\n", "k\n"});
  SolveResult r = solve_exact(inst);
  CHECK(r.size == 2);  // adjacent but never stacked
  CHECK(evaluate_layout(inst, r.layout) == 2);
}

TEST_CASE("exact matches brute on a shifted-overlap pair") {
  Instance inst = named({"ggg\n", "gg\n"});
  SolveResult e = solve_exact(inst);
  SolveResult b = solve_brute(inst);
  CHECK(e.size == 3);
  CHECK(b.size == 3);
  CHECK(evaluate_layout(inst, e.layout) == e.size);
}

TEST_CASE("exact layouts are valid and optimal on random tiny instances") {
  std::mt19937 rng(777);
  for (int i = 0; i < 25; ++i) {
    Instance inst = testutil::random_instance(rng, 3, 6, 2);
    SolveResult e = solve_exact(inst);
    SolveResult b = solve_brute(inst);
    CHECK(e.size == b.size);
    CHECK(evaluate_layout(inst, e.layout) == e.size);
    CHECK(evaluate_layout(inst, b.layout) == b.size);
    CHECK(e.optimal);
  }
}

TEST_CASE("mixed piece sizes with clashing colors still match brute") {
  Instance inst = named({"rrr\n", "kkk\n", "g\n"});
  SolveResult e = solve_exact(inst);
  SolveResult b = solve_brute(inst);
  CHECK(e.size == b.size);
  CHECK(evaluate_layout(inst, e.layout) == e.size);
}

TEST_CASE("worker count changes neither size nor layout") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 8; ++i) {
    Instance inst = testutil::random_instance(rng, 3, 6, 2);
    SolverConfig one;
    SolverConfig four;
    four.workers = 4;
    SolveResult a = solve_exact(inst, one);
    SolveResult b = solve_exact(inst, four);
    CHECK(a.size == b.size);
    CHECK(a.layout == b.layout);
  }
}

TEST_CASE("steiner mode agrees with contact mode") {
  std::mt19937 rng(909);
  for (int i = 0; i < 10; ++i) {
    Instance inst = testutil::random_instance(rng, 3, 5, 2);
    SolverConfig steiner;
    steiner.mode = SolveMode::ExactSteiner;
    CHECK(solve_exact(inst, steiner).size == solve_exact(inst).size);
  }
}

TEST_CASE("steiner enumeration counts helper cells exactly") {
  // two long bars of clashing colors with a single bridging cell still cost
  // their cell total; the union stays connected through the bridge
  Instance inst = named({"rr\n", "kk\n"});
  SolverConfig cfg;
  cfg.mode = SolveMode::ExactSteiner;
  SolveResult r = solve_exact(inst, cfg);
  CHECK(r.size == 4);
  CHECK(r.stats.steiner_cells == 0);
}

TEST_CASE("timeouts surrender with the incumbent and drop the optimal claim") {
  std::mt19937 rng(31337);
  Instance inst = testutil::random_instance(rng, 4, 10, 3);
  while (inst.piece_count() < 4) inst = testutil::random_instance(rng, 4, 10, 3);
  SolverConfig cfg;
  cfg.time_limit_seconds = 1e-9;
  SolveResult r = solve_exact(inst, cfg);
  CHECK(r.stats.timed_out);
  CHECK(!r.optimal);
  CHECK(r.size <= inst.total_cells);
  CHECK(evaluate_layout(inst, r.layout) == r.size);
}

TEST_CASE("the brute window guard rejects oversized searches") {
  Instance inst = named({"gggggggggg\n", "gggggggggg\n", "gggggggggg\n", "gggggggggg\n"});
  CHECK_THROWS_AS(solve_brute(inst, 40), SearchSpaceTooLargeError);
}

TEST_CASE("explicit windows must admit the largest piece") {
  Instance inst = named({"ggg\n", "g\n"});
  CHECK_THROWS_AS(solve_brute(inst, 2), PreconditionViolatedError);
  CHECK(solve_brute(inst, 3).size == 3);
}

TEST_CASE("greedy layouts are always valid and bounded by the total") {
  std::mt19937 rng(555);
  for (int i = 0; i < 20; ++i) {
    Instance inst = testutil::random_instance(rng, 4, 8, 3);
    SolveResult g = solve_greedy(inst);
    CHECK(evaluate_layout(inst, g.layout) == g.size);
    CHECK(g.size <= inst.total_cells);
  }
}

TEST_CASE("greedy recognises provably optimal merges") {
  Instance inst = named({"gg\n", "gg\n"});
  SolveResult g = solve_greedy(inst);
  CHECK(g.size == 2);
  CHECK(g.optimal);  // equal to the largest piece, cannot do better
}

TEST_CASE("subshape filtering removes dominated and duplicate pieces") {
  Instance inst = named({"ggg\n", "gg\n", "ggg\n"});
  Instance kept = subshape_filter(inst);
  REQUIRE(kept.piece_count() == 1);
  CHECK(kept.name(0) == "p0");  // duplicates keep the earliest copy

  SolveResult r = solve_exact(inst);
  CHECK(r.size == 3);
  REQUIRE(r.layout.size() == 3);
  // every filtered piece is reinstated at a concrete embedding
  CHECK(evaluate_layout(inst, r.layout) == r.size);
  for (const Offset& o : r.layout) CHECK(o == Offset{0, 0});
}

TEST_CASE("filtering can be disabled without changing the answer") {
  Instance inst = named({"ggg\n", "gg\n"});
  SolverConfig raw;
  raw.filter_subshapes = false;
  CHECK(solve_exact(inst, raw).size == solve_exact(inst).size);
}

TEST_CASE("single-color one-row instances reduce to the longest strip") {
  Instance inst = named({"ggg\n", "g\n", "gggg\n"});
  SolveResult r = solve_line_single_color(inst);
  CHECK(r.size == 4);
  CHECK(r.optimal);
  for (const Offset& o : r.layout) CHECK(o == Offset{0, 0});

  CHECK_THROWS_AS(solve_line_single_color(named({"gg\ng.\n"})), PreconditionViolatedError);
  CHECK_THROWS_AS(solve_line_single_color(named({"gr\n"})), PreconditionViolatedError);
  CHECK_THROWS_AS(solve_line_single_color(named({"g\n", "k\n"})), PreconditionViolatedError);
}

TEST_CASE("solver stats carry node counts and incumbent history") {
  Instance inst = named({"gg\n", "kk\n"});
  SolveResult r = solve_exact(inst);
  CHECK(r.stats.nodes > 0);
  REQUIRE(!r.stats.incumbent_history.empty());
  CHECK(r.stats.incumbent_history.back().second == r.size);
}
