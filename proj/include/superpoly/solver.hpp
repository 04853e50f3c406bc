#pragma once

#include "superpoly/instance.hpp"

namespace superpoly {

// Exhaustive branch-and-bound over connected placements. Contact mode places
// one piece at a time so that it is compatible with, and overlaps or
// edge-touches, the partial union; steiner mode additionally admits solutions
// where the piece union is disconnected and counts the fewest helper cells
// needed to join it up. Both report a true minimum; ties resolve to the
// lexicographically least offset vector (piece index, then dy, then dx).
// On hitting the time limit the incumbent is returned with optimal=false.
SolveResult solve_exact(const Instance& inst, const SolverConfig& cfg = {});

// Plain windowed enumeration: piece 0 at (0,0), every other piece over the
// offset window. Slow but simple; used as the reference for solve_exact.
// window > 0 is a square [-window, window]^2 bound; window = 0 selects the
// per-axis automatic bound. Guards the tuple count at 1e8.
SolveResult solve_brute(const Instance& inst, int window = 0);

// Repeatedly merges the pair of pieces with the largest max_overlap until one
// piece remains. Ties: smallest pair of current piece indices, then the
// overlap's own (dy, dx) rule. optimal is only set when the result provably
// matches the largest-piece lower bound.
SolveResult solve_greedy(const Instance& inst);

// Removes every piece that embeds into another remaining piece. Stable; among
// identical duplicates the first occurrence stays.
Instance subshape_filter(const Instance& inst);

// Single-pass solver for instances where every piece is a one-row strip of
// one shared color: the answer is the longest strip, all offsets (0,0).
// Throws PreconditionViolatedError when the instance is not of that form.
SolveResult solve_line_single_color(const Instance& inst);

}  // namespace superpoly
