#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "superpoly/polyomino.hpp"

namespace superpoly {

// An ordered list of named pieces. Names are unique, the list is nonempty.
struct Instance {
  std::vector<std::pair<std::string, Polyomino>> pieces;
  int total_cells = 0;

  Instance() = default;
  explicit Instance(std::vector<std::pair<std::string, Polyomino>> named_pieces);

  int piece_count() const { return static_cast<int>(pieces.size()); }
  const Polyomino& piece(int i) const { return pieces.at(i).second; }
  const std::string& name(int i) const { return pieces.at(i).first; }
};

// One offset per piece, in instance order.
using Layout = std::vector<Offset>;

enum class SolveMode { ExactContact, ExactSteiner, Greedy, Brute };

struct SolverConfig {
  SolveMode mode = SolveMode::ExactContact;
  // Offset window half-width for windowed searches; 0 selects a per-axis
  // bound (sum of piece widths, sum of piece heights) that always contains an
  // optimal layout.
  int window = 0;
  double time_limit_seconds = 0;  // 0 = unlimited
  int workers = 1;
  bool filter_subshapes = true;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0;
  std::vector<std::pair<std::uint64_t, int>> incumbent_history;  // (nodes, size)
  bool timed_out = false;
  int steiner_cells = 0;  // helper cells in the reported solution
};

struct SolveResult {
  Layout layout;
  int size = 0;
  bool optimal = false;
  SolveStats stats;
};

// The union of all pieces at their layout offsets.
CellCluster layout_union(const Instance& inst, const Layout& lay);

// Size of the union when the layout is valid: every pair of placed pieces
// compatible and the union 4-connected. Throws IncompatiblePairError /
// DisconnectedUnionError / PreconditionViolatedError (offset count mismatch).
int evaluate_layout(const Instance& inst, const Layout& lay);

}  // namespace superpoly
