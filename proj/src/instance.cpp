#include "superpoly/instance.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace superpoly {

Instance::Instance(std::vector<std::pair<std::string, Polyomino>> named_pieces)
    : pieces(std::move(named_pieces)) {
  if (pieces.empty()) throw EmptyInstanceError("an instance needs at least one piece");
  std::set<std::string> names;
  for (const auto& [name, poly] : pieces) {
    if (name.empty() || name.find_first_of(" \t\n") != std::string::npos)
      throw Error("piece name '" + name + "' is empty or contains whitespace");
    if (!names.insert(name).second) throw Error("duplicate piece name '" + name + "'");
    total_cells += poly.size();
  }
}

CellCluster layout_union(const Instance& inst, const Layout& lay) {
  if (lay.size() != inst.pieces.size())
    throw PreconditionViolatedError("layout must carry one offset per piece");
  CellCluster all;
  for (std::size_t i = 0; i < lay.size(); ++i)
    for (const auto& [c, color] : inst.piece(static_cast<int>(i)).cells())
      all.emplace(c + lay[i], color);
  return all;
}

int evaluate_layout(const Instance& inst, const Layout& lay) {
  if (lay.size() != inst.pieces.size())
    throw PreconditionViolatedError("layout must carry one offset per piece");

  // color and first-owner per cell, so conflicts name the offending pair
  std::map<Cell, std::pair<ColorId, int>, CellOrder> all;
  for (int i = 0; i < inst.piece_count(); ++i) {
    for (const auto& [c, color] : inst.piece(i).cells()) {
      Cell t = c + lay[i];
      auto [it, inserted] = all.emplace(t, std::make_pair(color, i));
      if (!inserted && it->second.first != color)
        throw IncompatiblePairError("pieces " + inst.name(it->second.second) + " and " +
                                        inst.name(i) + " clash at (" + std::to_string(t.x) +
                                        ", " + std::to_string(t.y) + ")",
                                    it->second.second, i, t);
    }
  }

  CellCluster cells;
  for (const auto& [c, v] : all) cells.emplace(c, v.first);
  if (!is_connected(cells))
    throw DisconnectedUnionError("layout union is not 4-connected");
  return static_cast<int>(cells.size());
}

}  // namespace superpoly
