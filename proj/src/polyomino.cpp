#include "superpoly/polyomino.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace superpoly {

Palette::Palette(std::vector<PaletteEntry> entries) : entries_(std::move(entries)) {
  if (entries_.size() > 255) throw Error("palette holds at most 255 colors");
  std::set<char> seen;
  for (const auto& e : entries_) {
    if (e.symbol == '.') throw Error("palette symbol '.' is reserved for empty cells");
    if (!seen.insert(e.symbol).second)
      throw Error(std::string("duplicate palette symbol '") + e.symbol + "'");
  }
}

const Palette& Palette::canonical() {
  static const Palette p({{'g', "gray"},
                          {'k', "black"},
                          {'r', "red"},
                          {'G', "green"},
                          {'b', "blue"},
                          {'p', "purple"},
                          {'o', "orange"}});
  return p;
}

std::optional<ColorId> Palette::by_symbol(char c) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].symbol == c) return static_cast<ColorId>(i);
  return std::nullopt;
}

std::optional<ColorId> Palette::by_name(std::string_view n) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].name == n) return static_cast<ColorId>(i);
  return std::nullopt;
}

bool is_connected(const CellCluster& cluster) {
  if (cluster.empty()) return true;
  std::set<Cell, CellOrder> todo;
  for (const auto& [c, _] : cluster) todo.insert(c);
  std::vector<Cell> stack{*todo.begin()};
  todo.erase(todo.begin());
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Cell nb : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1}, Cell{c.x, c.y - 1}}) {
      auto it = todo.find(nb);
      if (it != todo.end()) {
        todo.erase(it);
        stack.push_back(nb);
      }
    }
  }
  return todo.empty();
}

std::pair<Polyomino, Offset> normalize(const CellCluster& cluster) {
  if (cluster.empty()) throw EmptyClusterError("cannot normalize an empty cell cluster");
  if (!is_connected(cluster))
    throw DisconnectedClusterError("cell cluster is not 4-connected");

  int minx = INT_MAX, miny = INT_MAX, maxx = INT_MIN, maxy = INT_MIN;
  for (const auto& [c, _] : cluster) {
    minx = std::min(minx, c.x);
    miny = std::min(miny, c.y);
    maxx = std::max(maxx, c.x);
    maxy = std::max(maxy, c.y);
  }

  Polyomino p;
  p.width_ = maxx - minx + 1;
  p.height_ = maxy - miny + 1;
  p.grid_.assign(static_cast<std::size_t>(p.width_) * p.height_, -1);
  p.cells_.reserve(cluster.size());
  // map iteration is already (y, x) ordered, and translation preserves that
  for (const auto& [c, color] : cluster) {
    Cell t{c.x - minx, c.y - miny};
    p.cells_.emplace_back(t, color);
    p.grid_[static_cast<std::size_t>(t.y) * p.width_ + t.x] = color;
  }
  return {std::move(p), Offset{-minx, -miny}};
}

Polyomino make_polyomino(const CellCluster& cluster) { return normalize(cluster).first; }

CellCluster translate(const Polyomino& p, Offset o) {
  CellCluster out;
  for (const auto& [c, color] : p.cells()) out.emplace(c + o, color);
  return out;
}

bool compatible(const Polyomino& pu, const Polyomino& pv, Offset o) {
  for (const auto& [c, color] : pv.cells()) {
    int other = pu.color_at(c.x + o.dx, c.y + o.dy);
    if (other >= 0 && other != color) return false;
  }
  return true;
}

CellCluster superimpose(const Polyomino& pu, const Polyomino& pv, Offset o) {
  for (const auto& [c, color] : pv.cells()) {
    Cell t = c + o;
    int other = pu.color_at(t);
    if (other >= 0 && other != color)
      throw ColorConflictError("superimpose: conflicting colors at (" + std::to_string(t.x) +
                                   ", " + std::to_string(t.y) + ")",
                               t);
  }
  CellCluster out;
  for (const auto& [c, color] : pu.cells()) out.emplace(c, color);
  for (const auto& [c, color] : pv.cells()) out.emplace(c + o, color);
  return out;
}

std::vector<Offset> is_superpolyomino(const Polyomino& container, const Polyomino& piece) {
  std::vector<Offset> found;
  for (int dy = 0; dy + piece.height() <= container.height(); ++dy) {
    for (int dx = 0; dx + piece.width() <= container.width(); ++dx) {
      bool ok = true;
      for (const auto& [c, color] : piece.cells()) {
        if (container.color_at(c.x + dx, c.y + dy) != color) {
          ok = false;
          break;
        }
      }
      if (ok) found.push_back({dx, dy});
    }
  }
  return found;
}

std::pair<Offset, int> max_overlap(const Polyomino& pu, const Polyomino& pv) {
  Offset best_off{0, 0};
  int best_count = -1;
  for (int dy = -pv.height(); dy <= pu.height(); ++dy) {
    for (int dx = -pv.width(); dx <= pu.width(); ++dx) {
      int shared = 0;
      bool touches = false;
      bool ok = true;
      for (const auto& [c, color] : pv.cells()) {
        int x = c.x + dx, y = c.y + dy;
        int other = pu.color_at(x, y);
        if (other >= 0) {
          if (other != color) {
            ok = false;
            break;
          }
          ++shared;
        } else if (!touches) {
          touches = pu.color_at(x + 1, y) >= 0 || pu.color_at(x - 1, y) >= 0 ||
                    pu.color_at(x, y + 1) >= 0 || pu.color_at(x, y - 1) >= 0;
        }
      }
      if (!ok || (shared == 0 && !touches)) continue;
      if (shared > best_count) {  // scan order is (dy, dx); first max wins ties
        best_count = shared;
        best_off = {dx, dy};
      }
    }
  }
  return {best_off, best_count};
}

}  // namespace superpoly
