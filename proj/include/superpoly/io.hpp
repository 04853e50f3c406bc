#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "superpoly/coloring.hpp"
#include "superpoly/instance.hpp"
#include "superpoly/setcover.hpp"

namespace superpoly {

// graph <n> header followed by edge <u> <v> lines (0-indexed).
Graph parse_graph(std::string_view text);
std::string emit_graph(const Graph& g);

// setcover <n> <m> header followed by m lines "set <j>: e1 e2 ..."
// (sets and elements 1-indexed, j in order).
SetCoverInstance parse_setcover(std::string_view text);
std::string emit_setcover(const SetCoverInstance& sc);

// Where an instance file's pieces came from, recorded as comment headers so
// that structured solvers and extractors can recover the original input.
struct Provenance {
  enum class Kind { None, Coloring, SetCover };
  Kind kind = Kind::None;
  std::optional<Graph> graph;
  std::optional<SetCoverInstance> cover;
  bool two_color = false;
};

struct InstanceFile {
  Instance instance;
  Provenance provenance;
};

// Instance file: optional provenance comments, then one block per piece:
// "poly <name>" followed by the piece in grid format and a blank line.
InstanceFile parse_instance(std::string_view text);
std::string emit_instance(const Instance& inst, const Provenance& prov = {});

// Layout file: one "place <name> <dx> <dy>" line per piece, instance order.
Layout parse_layout(std::string_view text, const Instance& inst);
std::string emit_layout(const Instance& inst, const Layout& lay);

}  // namespace superpoly
