#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superpoly/color.hpp"
#include "superpoly/errors.hpp"
#include "superpoly/geometry.hpp"

namespace superpoly {

// A free-floating set of colored cells. May be anywhere on the lattice and in
// any state of (dis)connection; Polyomino is the validated, normalized form.
using CellCluster = std::map<Cell, ColorId, CellOrder>;

// A nonempty, 4-connected set of colored cells whose bounding box has its
// lower-left corner at (0,0). Construction goes through normalize(), which
// enforces all three invariants.
class Polyomino {
 public:
  int size() const { return static_cast<int>(cells_.size()); }
  int width() const { return width_; }
  int height() const { return height_; }

  // -1 when the location is outside the shape, otherwise the ColorId.
  int color_at(int x, int y) const {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return -1;
    return grid_[static_cast<std::size_t>(y) * width_ + x];
  }
  int color_at(Cell c) const { return color_at(c.x, c.y); }

  // Cells in canonical (y, x) order.
  const std::vector<std::pair<Cell, ColorId>>& cells() const { return cells_; }

  friend bool operator==(const Polyomino& a, const Polyomino& b) {
    return a.cells_ == b.cells_;
  }

 private:
  Polyomino() = default;
  friend std::pair<Polyomino, Offset> normalize(const CellCluster&);

  std::vector<std::pair<Cell, ColorId>> cells_;
  int width_ = 0;
  int height_ = 0;
  std::vector<std::int16_t> grid_;  // width*height, -1 for empty
};

// True when every cell can reach every other through shared edges.
bool is_connected(const CellCluster& cluster);

// Translates the cluster so its bounding box corner lands on (0,0) and
// validates it. Returns the polyomino together with the translation that was
// applied. Throws EmptyClusterError / DisconnectedClusterError.
std::pair<Polyomino, Offset> normalize(const CellCluster& cluster);

// Shorthand for normalize(...).first.
Polyomino make_polyomino(const CellCluster& cluster);

// The cells of p translated by o.
CellCluster translate(const Polyomino& p, Offset o);

// True when pu and the o-translate of pv agree on every cell they share.
bool compatible(const Polyomino& pu, const Polyomino& pv, Offset o);

// Union of pu and the o-translate of pv, in pu's frame. Requires
// compatible(pu, pv, o); throws ColorConflictError carrying the first
// conflicting cell (scanning pv in canonical order) otherwise.
CellCluster superimpose(const Polyomino& pu, const Polyomino& pv, Offset o);

// Every offset at which piece appears inside container with matching colors,
// in ascending (dy, dx) order. Empty when container is not a superpolyomino
// of piece.
std::vector<Offset> is_superpolyomino(const Polyomino& container, const Polyomino& piece);

// The offset maximizing the number of shared cells over all placements where
// the two pieces are compatible and their union is 4-connected. Ties break
// toward the smallest (dy, dx). The best overlap may be 0 (edge-adjacent
// placement); a valid placement always exists.
std::pair<Offset, int> max_overlap(const Polyomino& pu, const Polyomino& pv);

// Grid text format: optional '#' comment lines, an optional
// "palette: <char>=<name> ..." header remapping symbols by color name, then
// one row per line with the top row at maximum y; '.' is an empty cell.
// The parsed shape is normalized. Throws ParseError / UnknownColorCharError /
// EmptyClusterError / DisconnectedClusterError.
Polyomino parse_polyomino(std::string_view text);

// Renders with the canonical palette, bottom row last, no header.
std::string emit_polyomino(const Polyomino& p);

}  // namespace superpoly
