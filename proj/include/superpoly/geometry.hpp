#pragma once

#include <cstdint>

namespace superpoly {

// Lattice cell; y grows upward, so "row above" means larger y.
struct Cell {
  int x = 0;
  int y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Canonical scan order is row-major from the bottom: y first, then x.
constexpr bool cell_less(const Cell& a, const Cell& b) {
  return a.y != b.y ? a.y < b.y : a.x < b.x;
}

struct CellOrder {
  constexpr bool operator()(const Cell& a, const Cell& b) const { return cell_less(a, b); }
};

// Translation vector between lattice positions.
struct Offset {
  int dx = 0;
  int dy = 0;
  friend bool operator==(const Offset&, const Offset&) = default;
};

// Offsets are ordered (dy, dx); every tie-break in the library uses this.
constexpr bool offset_less(const Offset& a, const Offset& b) {
  return a.dy != b.dy ? a.dy < b.dy : a.dx < b.dx;
}

struct OffsetOrder {
  constexpr bool operator()(const Offset& a, const Offset& b) const { return offset_less(a, b); }
};

constexpr Offset operator+(Offset a, Offset b) { return {a.dx + b.dx, a.dy + b.dy}; }
constexpr Offset operator-(Offset a, Offset b) { return {a.dx - b.dx, a.dy - b.dy}; }
constexpr Offset operator-(Offset o) { return {-o.dx, -o.dy}; }
constexpr Cell operator+(Cell c, Offset o) { return {c.x + o.dx, c.y + o.dy}; }

}  // namespace superpoly
