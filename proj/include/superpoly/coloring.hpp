#pragma once

#include <utility>
#include <vector>

#include "superpoly/instance.hpp"
#include "superpoly/solver.hpp"

namespace superpoly {

// Simple undirected graph on vertices 0..n-1. No self-loops; edges are
// deduplicated and stored with u < v.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n + v]; }
  int degree(int v) const { return degree_[v]; }

 private:
  std::vector<char> adj_;
  std::vector<int> degree_;
};

// The piece built for vertex v: a 2n x n rectangle (n = vertex count) of gray
// cells with green/blue/purple/orange corners, a black marker cell for v
// itself, red marker cells for its neighbors, and missing cells for every
// non-neighbor. Requires n >= 3. Size is 2n^2 - (n - 1 - deg(v)).
Polyomino build_vertex_polyomino(const Graph& g, int v);

struct ColoringInstance {
  Instance instance;  // pieces named v0..v{n-1}, in vertex order
  Graph graph;
};

ColoringInstance build_coloring_instance(const Graph& g);

// Places the vertices of part j side by side at offset (j * 2n, 0): members
// of one part stack exactly, parts line up into one connected strip. Parts
// must partition the vertices and each be independent in the graph.
Layout deck_layout(const ColoringInstance& ci, const std::vector<std::vector<int>>& parts);

// Minimum union size over every partition of the vertices into independent
// sets, reported as the deck layout of the best partition (first in
// restricted-growth order among ties). Exhaustive; requires n <= 10.
SolveResult deck_solve(const ColoringInstance& ci);

// Groups vertices by identical layout offset and returns the groups in
// ascending offset order. Each group must be independent, otherwise
// DeckNotIndependentError.
std::vector<std::vector<int>> extract_coloring(const ColoringInstance& ci, const Layout& lay);

// Smallest k with size <= 2 k n^2; inverts the deck size bound.
int threshold_k(int size, int vertex_count);

// Encoding of a multicolor cell as a two-color block: a side x side square
// with a black border, gray interior, and the color index written in binary
// into the bit cells (bit 0 first; gray = 0, black = 1).
struct TwoColorCodec {
  int side = 8;
  std::vector<Cell> bit_cells = {{2, 2}, {3, 3}, {4, 4}};

  int capacity() const { return 1 << bit_cells.size(); }
};

// Replaces every cell of p by its macrocell at (side*x, side*y). Multiplies
// the size by side^2 and preserves connectivity and compatibility structure.
// Throws PaletteTooLargeError when a color index does not fit the bit cells.
Polyomino to_two_color(const Polyomino& p, const TwoColorCodec& codec = {});

// Exact inverse of to_two_color. The input must be a disjoint union of
// aligned, well-formed macrocells; otherwise MalformedMacrocellError.
Polyomino from_two_color(const Polyomino& p, const TwoColorCodec& codec = {});

}  // namespace superpoly
