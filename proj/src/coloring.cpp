#include "superpoly/coloring.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace superpoly {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list) : n(vertex_count) {
  if (n < 1) throw Error("a graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  degree_.assign(n, 0);
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                  ") is out of range");
    if (u == v) throw Error("self-loop on vertex " + std::to_string(u));
    if (adjacent(u, v)) continue;
    adj_[static_cast<std::size_t>(u) * n + v] = 1;
    adj_[static_cast<std::size_t>(v) * n + u] = 1;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) {
    ++degree_[u];
    ++degree_[v];
  }
}

Polyomino build_vertex_polyomino(const Graph& g, int v) {
  int n = g.n;
  if (n < 3) throw GraphTooSmallError("vertex pieces need at least 3 vertices");
  if (v < 0 || v >= n) throw Error("vertex " + std::to_string(v) + " is out of range");

  CellCluster cells;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < 2 * n; ++x) cells[{x, y}] = kGray;

  cells[{0, 0}] = kGreen;
  cells[{2 * n - 1, 0}] = kBlue;
  cells[{0, n - 1}] = kPurple;
  cells[{2 * n - 1, n - 1}] = kOrange;

  for (int i = 0; i < n; ++i) {
    Cell marker{2 * i + 1, 1};
    if (i == v)
      cells[marker] = kBlack;
    else if (g.adjacent(v, i))
      cells[marker] = kRed;
    else
      cells.erase(marker);
  }
  return make_polyomino(cells);
}

ColoringInstance build_coloring_instance(const Graph& g) {
  std::vector<std::pair<std::string, Polyomino>> pieces;
  for (int v = 0; v < g.n; ++v)
    pieces.emplace_back("v" + std::to_string(v), build_vertex_polyomino(g, v));
  return ColoringInstance{Instance(std::move(pieces)), g};
}

Layout deck_layout(const ColoringInstance& ci, const std::vector<std::vector<int>>& parts) {
  const Graph& g = ci.graph;
  int n = g.n;

  std::vector<int> part_of(n, -1);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    for (int v : parts[j]) {
      if (v < 0 || v >= n || part_of[v] >= 0)
        throw NotAPartitionError("parts must list every vertex exactly once");
      part_of[v] = static_cast<int>(j);
    }
  }
  for (int v = 0; v < n; ++v)
    if (part_of[v] < 0) throw NotAPartitionError("parts must list every vertex exactly once");

  for (const auto& part : parts)
    for (std::size_t a = 0; a < part.size(); ++a)
      for (std::size_t b = a + 1; b < part.size(); ++b)
        if (g.adjacent(part[a], part[b]))
          throw PartNotIndependentError("vertices " + std::to_string(part[a]) + " and " +
                                            std::to_string(part[b]) +
                                            " are adjacent but share a part",
                                        part[a], part[b]);

  Layout lay(n);
  for (int v = 0; v < n; ++v) lay[v] = {part_of[v] * 2 * n, 0};
  return lay;
}

SolveResult deck_solve(const ColoringInstance& ci) {
  const Graph& g = ci.graph;
  int n = g.n;
  if (n > 10) throw TooManyVerticesError("deck_solve enumerates partitions; 10 vertices max");
  auto start = std::chrono::steady_clock::now();

  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : g.edges) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }

  // one deck block per part: the full rectangle minus the marker cells that
  // none of the stacked pieces provides
  auto block_size = [&](std::uint32_t members) {
    std::uint32_t covered = members;
    for (int v = 0; v < n; ++v)
      if (members & (1u << v)) covered |= nbr[v];
    return 2 * n * n - (n - std::popcount(covered));
  };

  std::vector<std::uint32_t> classes;
  std::vector<int> assign(n, -1);
  std::vector<int> best_assign;
  int best_size = INT_MAX;
  std::uint64_t nodes = 0;

  auto rec = [&](auto&& self, int v) -> void {
    ++nodes;
    if (v == n) {
      int size = 0;
      for (std::uint32_t members : classes) size += block_size(members);
      if (size < best_size) {  // first optimum in restricted-growth order
        best_size = size;
        best_assign = assign;
      }
      return;
    }
    for (std::size_t c = 0; c <= classes.size(); ++c) {
      if (c < classes.size()) {
        if (classes[c] & nbr[v]) continue;  // would break independence
        classes[c] |= 1u << v;
        assign[v] = static_cast<int>(c);
        self(self, v + 1);
        classes[c] &= ~(1u << v);
      } else {
        classes.push_back(1u << v);
        assign[v] = static_cast<int>(c);
        self(self, v + 1);
        classes.pop_back();
      }
    }
  };
  rec(rec, 0);

  int part_count = *std::max_element(best_assign.begin(), best_assign.end()) + 1;
  std::vector<std::vector<int>> parts(part_count);
  for (int v = 0; v < n; ++v) parts[best_assign[v]].push_back(v);

  SolveResult res;
  res.layout = deck_layout(ci, parts);
  res.size = best_size;
  res.optimal = true;
  res.stats.nodes = nodes;
  res.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::vector<std::vector<int>> extract_coloring(const ColoringInstance& ci, const Layout& lay) {
  const Graph& g = ci.graph;
  if (static_cast<int>(lay.size()) != g.n)
    throw PreconditionViolatedError("layout must carry one offset per vertex");

  std::map<Offset, std::vector<int>, OffsetOrder> groups;
  for (int v = 0; v < g.n; ++v) groups[lay[v]].push_back(v);

  std::vector<std::vector<int>> classes;
  for (const auto& [off, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (g.adjacent(members[a], members[b]))
          throw DeckNotIndependentError("vertices " + std::to_string(members[a]) + " and " +
                                            std::to_string(members[b]) +
                                            " share an offset but are adjacent",
                                        members[a], members[b]);
    classes.push_back(members);
  }
  return classes;
}

int threshold_k(int size, int vertex_count) {
  if (vertex_count < 1) throw Error("vertex count must be positive");
  if (size < 1) throw Error("size must be positive");
  int block = 2 * vertex_count * vertex_count;
  return (size + block - 1) / block;
}

namespace {

void validate_codec(const TwoColorCodec& codec) {
  if (codec.side < 3)
    throw PreconditionViolatedError("macrocell side must be at least 3");
  std::set<std::pair<int, int>> seen;
  for (const Cell& c : codec.bit_cells) {
    if (c.x < 1 || c.y < 1 || c.x > codec.side - 2 || c.y > codec.side - 2)
      throw PreconditionViolatedError("bit cells must lie in the macrocell interior");
    if (!seen.insert({c.x, c.y}).second)
      throw PreconditionViolatedError("bit cells must be distinct");
  }
  if (codec.bit_cells.size() > 20)
    throw PreconditionViolatedError("too many bit cells");
}

}  // namespace

Polyomino to_two_color(const Polyomino& p, const TwoColorCodec& codec) {
  validate_codec(codec);
  int side = codec.side;

  std::vector<int> bit_of(static_cast<std::size_t>(side) * side, -1);
  for (std::size_t b = 0; b < codec.bit_cells.size(); ++b)
    bit_of[codec.bit_cells[b].y * side + codec.bit_cells[b].x] = static_cast<int>(b);

  CellCluster out;
  for (const auto& [c, color] : p.cells()) {
    if (color >= codec.capacity())
      throw PaletteTooLargeError("color index " + std::to_string(int(color)) +
                                 " does not fit in " +
                                 std::to_string(codec.bit_cells.size()) + " bit cells");
    for (int sy = 0; sy < side; ++sy) {
      for (int sx = 0; sx < side; ++sx) {
        ColorId out_color;
        if (sx == 0 || sy == 0 || sx == side - 1 || sy == side - 1) {
          out_color = kBlack;
        } else {
          int b = bit_of[sy * side + sx];
          out_color = (b >= 0 && ((color >> b) & 1)) ? kBlack : kGray;
        }
        out[{c.x * side + sx, c.y * side + sy}] = out_color;
      }
    }
  }
  return make_polyomino(out);
}

Polyomino from_two_color(const Polyomino& p, const TwoColorCodec& codec) {
  validate_codec(codec);
  int side = codec.side;

  std::vector<int> bit_of(static_cast<std::size_t>(side) * side, -1);
  for (std::size_t b = 0; b < codec.bit_cells.size(); ++b)
    bit_of[codec.bit_cells[b].y * side + codec.bit_cells[b].x] = static_cast<int>(b);

  struct Block {
    int count = 0;
    int bits = 0;
  };
  std::map<Cell, Block, CellOrder> blocks;

  auto floordiv = [](int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };

  for (const auto& [c, color] : p.cells()) {
    if (color != kGray && color != kBlack)
      throw MalformedMacrocellError("cell is neither gray nor black");
    int bx = floordiv(c.x, side), by = floordiv(c.y, side);
    int lx = c.x - bx * side, ly = c.y - by * side;
    Block& blk = blocks[{bx, by}];
    ++blk.count;
    if (lx == 0 || ly == 0 || lx == side - 1 || ly == side - 1) {
      if (color != kBlack)
        throw MalformedMacrocellError("macrocell border cell is not black");
    } else {
      int b = bit_of[ly * side + lx];
      if (b >= 0) {
        if (color == kBlack) blk.bits |= 1 << b;
      } else if (color != kGray) {
        throw MalformedMacrocellError("macrocell interior cell is not gray");
      }
    }
  }

  int palette_size = static_cast<int>(Palette::canonical().size());
  CellCluster out;
  for (const auto& [pos, blk] : blocks) {
    if (blk.count != side * side)
      throw MalformedMacrocellError("incomplete macrocell at (" + std::to_string(pos.x * side) +
                                    ", " + std::to_string(pos.y * side) + ")");
    if (blk.bits >= palette_size)
      throw MalformedMacrocellError("decoded color index " + std::to_string(blk.bits) +
                                    " is outside the palette");
    out[pos] = static_cast<ColorId>(blk.bits);
  }
  return make_polyomino(out);
}

}  // namespace superpoly
