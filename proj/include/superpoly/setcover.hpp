#pragma once

#include <utility>
#include <vector>

#include "superpoly/instance.hpp"
#include "superpoly/solver.hpp"

namespace superpoly {

// Covering problem over universe {1..n} with sets S_1..S_m (1-indexed).
// Element values are validated; the union of the sets must cover the
// universe.
struct SetCoverInstance {
  int n = 0;
  std::vector<std::vector<int>> sets;

  SetCoverInstance(int universe, std::vector<std::vector<int>> set_list);

  int m() const { return static_cast<int>(sets.size()); }
  bool contains(int set_index, int element) const;  // 1-indexed both
};

// Piece for element i: an all-gray (n+1)x(n+1) base at the origin, a pole up
// the left edge spanning y = n..3n, and an n-cell flag at row y = n + 2i.
// Size is n^2 + 5n + 1.
struct ElementPolyomino {
  int element = 0;
  Polyomino poly;
};

ElementPolyomino build_element_polyomino(int n, int i);

// The fixed piece: one gadget per set, side by side with stride n+2, joined
// by single connector cells on the bottom row. Gadget j has the element base
// with cell (1,1) punctured, the same pole, and one flag per member of S_j.
struct SetPolyomino {
  Polyomino poly;
  int n = 0;
  int m = 0;

  int base_origin_x(int j) const { return (n + 2) * (j - 1); }  // j is 1-indexed
  Cell puncture(int j) const { return {base_origin_x(j) + 1, 1}; }
};

SetPolyomino build_set_polyomino(const SetCoverInstance& sc);

// Pieces: the set polyomino (named Pbar) followed by P1..Pn.
Instance build_setcover_instance(const SetCoverInstance& sc);

// assignment[i-1] = 1-indexed set for element i; every element must be
// assigned to a set containing it (otherwise NotRulesAbidingError).
using AlignmentAssignment = std::vector<int>;

// Pbar at (0,0) and element i base-aligned on its assigned gadget. Each
// distinct assigned set contributes exactly one new cell (its puncture), so
// the union size is |Pbar| + #distinct sets.
Layout aligned_layout(const SetCoverInstance& sc, const AlignmentAssignment& assignment);

// Minimum distinct-set count over rules-abiding assignments, found by dynamic
// programming over (element, used-set mask); requires n <= 12 and m <= 12.
// Returns the solve result together with the sorted set indices used.
std::pair<SolveResult, std::vector<int>> aligned_solve(const SetCoverInstance& sc);

// Reads the chosen sets back out of an aligned layout. Every element offset
// relative to Pbar must be a gadget base origin (else MisalignedElementError)
// of a set containing the element (else WrongSetError).
std::vector<int> extract_cover(const SetCoverInstance& sc, const Layout& lay);

// Union size of Pbar with element i placed at an arbitrary offset. The
// placement need not be connected or rules-abiding; this measures how
// expensive a stray placement is.
int misalignment_size(const SetCoverInstance& sc, int element, Offset offset);

}  // namespace superpoly
