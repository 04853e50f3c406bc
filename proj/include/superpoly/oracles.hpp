#pragma once

#include <vector>

#include "superpoly/coloring.hpp"
#include "superpoly/setcover.hpp"

namespace superpoly {

// Reference answers computed by deliberately simple exhaustive searches.
// These exist to cross-check the geometric pipeline and stay independent of
// it: nothing here touches polyominoes.

struct ColoringWitness {
  int k = 0;
  std::vector<std::vector<int>> classes;  // class index -> vertices
};

// Chromatic number by first-fit backtracking over k = 1, 2, ...; the witness
// is the lexicographically least proper coloring at the optimum. n <= 10.
ColoringWitness chromatic_number(const Graph& g);

struct CoverWitness {
  int k = 0;
  std::vector<int> sets;  // sorted, 1-indexed
};

// Minimum set cover by subset enumeration in ascending cardinality and
// lexicographic order, so the witness is the lexicographically least optimum.
// m <= 20, n <= 64.
CoverWitness min_set_cover(const SetCoverInstance& sc);

// Closed-form piece sizes, for cross-checking the builders cell by cell.
int vertex_poly_size(int vertex_count, int degree);
int element_poly_size(int n);
int set_poly_size(const SetCoverInstance& sc);

}  // namespace superpoly
