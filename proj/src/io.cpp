#include "superpoly/io.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace superpoly {
namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty() && cur.back() == '\r') cur.pop_back();
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

bool is_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t");
  return pos != std::string::npos && line[pos] == '#';
}

// text after the leading '#', without surrounding whitespace
std::string comment_body(const std::string& line) {
  auto pos = line.find('#') + 1;
  auto begin = line.find_first_not_of(" \t", pos);
  if (begin == std::string::npos) return "";
  auto end = line.find_last_not_of(" \t");
  return line.substr(begin, end - begin + 1);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string t;
  while (in >> t) tokens.push_back(t);
  return tokens;
}

int parse_int(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected ") + what + ", got '" + token + "'");
  }
}

}  // namespace

Polyomino parse_polyomino(std::string_view text) {
  std::map<char, ColorId> custom;
  bool have_palette = false;
  std::vector<std::string> rows;

  for (const std::string& raw : split_lines(text)) {
    if (is_blank(raw) || is_comment(raw)) continue;
    if (raw.rfind("palette:", 0) == 0) {
      if (have_palette) throw ParseError("duplicate palette line");
      have_palette = true;
      for (const std::string& tok : tokenize(raw.substr(8))) {
        if (tok.size() < 3 || tok[1] != '=')
          throw ParseError("palette entry '" + tok + "' is not <char>=<name>");
        char symbol = tok[0];
        if (symbol == '.') throw ParseError("'.' is reserved for empty cells");
        auto color = Palette::canonical().by_name(tok.substr(2));
        if (!color) throw ParseError("unknown color name '" + tok.substr(2) + "'");
        if (!custom.emplace(symbol, *color).second)
          throw ParseError(std::string("duplicate palette symbol '") + symbol + "'");
      }
      continue;
    }
    std::string row = raw;
    while (!row.empty() && (row.back() == ' ' || row.back() == '\t')) row.pop_back();
    rows.push_back(row);
  }

  CellCluster cells;
  int height = static_cast<int>(rows.size());
  for (int r = 0; r < height; ++r) {
    const std::string& row = rows[r];
    for (int c = 0; c < static_cast<int>(row.size()); ++c) {
      char ch = row[c];
      if (ch == '.') continue;
      ColorId color;
      if (have_palette) {
        auto it = custom.find(ch);
        if (it == custom.end())
          throw UnknownColorCharError(std::string("symbol '") + ch +
                                      "' is not in the palette line");
        color = it->second;
      } else {
        auto found = Palette::canonical().by_symbol(ch);
        if (!found)
          throw UnknownColorCharError(std::string("symbol '") + ch +
                                      "' is not a canonical color");
        color = *found;
      }
      cells[{c, height - 1 - r}] = color;
    }
  }
  return make_polyomino(cells);
}

std::string emit_polyomino(const Polyomino& p) {
  const Palette& palette = Palette::canonical();
  std::string out;
  for (int y = p.height() - 1; y >= 0; --y) {
    for (int x = 0; x < p.width(); ++x) {
      int color = p.color_at(x, y);
      out.push_back(color < 0 ? '.' : palette.symbol(static_cast<ColorId>(color)));
    }
    out.push_back('\n');
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  for (const std::string& line : split_lines(text)) {
    if (is_blank(line) || is_comment(line)) continue;
    auto tokens = tokenize(line);
    if (tokens[0] == "graph") {
      if (n >= 0) throw ParseError("duplicate graph header");
      if (tokens.size() != 2) throw ParseError("graph header wants one vertex count");
      n = parse_int(tokens[1], "vertex count");
    } else if (tokens[0] == "edge") {
      if (n < 0) throw ParseError("edge line before the graph header");
      if (tokens.size() != 3) throw ParseError("edge line wants two endpoints");
      edges.emplace_back(parse_int(tokens[1], "vertex"), parse_int(tokens[2], "vertex"));
    } else {
      throw ParseError("unexpected line '" + line + "' in graph file");
    }
  }
  if (n < 0) throw ParseError("missing graph header");
  try {
    return Graph(n, std::move(edges));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string emit_graph(const Graph& g) {
  std::string out = "graph " + std::to_string(g.n) + "\n";
  for (auto [u, v] : g.edges)
    out += "edge " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

SetCoverInstance parse_setcover(std::string_view text) {
  int n = -1, m = -1;
  std::vector<std::vector<int>> sets;
  for (const std::string& line : split_lines(text)) {
    if (is_blank(line) || is_comment(line)) continue;
    auto tokens = tokenize(line);
    if (tokens[0] == "setcover") {
      if (n >= 0) throw ParseError("duplicate setcover header");
      if (tokens.size() != 3) throw ParseError("setcover header wants <n> <m>");
      n = parse_int(tokens[1], "element count");
      m = parse_int(tokens[2], "set count");
    } else if (tokens[0] == "set") {
      if (n < 0) throw ParseError("set line before the setcover header");
      if (tokens.size() < 2 || tokens[1].empty() || tokens[1].back() != ':')
        throw ParseError("set line wants 'set <j>: elements...'");
      int j = parse_int(tokens[1].substr(0, tokens[1].size() - 1), "set index");
      if (j != static_cast<int>(sets.size()) + 1)
        throw ParseError("set " + std::to_string(j) + " is out of order");
      std::vector<int> members;
      for (std::size_t t = 2; t < tokens.size(); ++t)
        members.push_back(parse_int(tokens[t], "element"));
      sets.push_back(std::move(members));
    } else {
      throw ParseError("unexpected line '" + line + "' in setcover file");
    }
  }
  if (n < 0) throw ParseError("missing setcover header");
  if (static_cast<int>(sets.size()) != m)
    throw ParseError("declared " + std::to_string(m) + " sets, found " +
                     std::to_string(sets.size()));
  try {
    return SetCoverInstance(n, std::move(sets));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string emit_setcover(const SetCoverInstance& sc) {
  std::string out = "setcover " + std::to_string(sc.n) + " " + std::to_string(sc.m()) + "\n";
  for (int j = 1; j <= sc.m(); ++j) {
    out += "set " + std::to_string(j) + ":";
    for (int e : sc.sets[j - 1]) out += " " + std::to_string(e);
    out += "\n";
  }
  return out;
}

InstanceFile parse_instance(std::string_view text) {
  Provenance prov;
  std::string payload;  // graph or setcover lines recovered from comments
  std::vector<std::pair<std::string, std::string>> blocks;

  for (const std::string& line : split_lines(text)) {
    if (is_comment(line)) {
      std::string body = comment_body(line);
      auto tokens = tokenize(body);
      if (tokens.empty()) continue;
      if (tokens[0] == "reduction:") {
        if (tokens.size() < 2) throw ParseError("reduction comment without a kind");
        if (tokens[1] == "coloring")
          prov.kind = Provenance::Kind::Coloring;
        else if (tokens[1] == "setcover")
          prov.kind = Provenance::Kind::SetCover;
        else
          throw ParseError("unknown reduction kind '" + tokens[1] + "'");
      } else if (tokens[0] == "graph" || tokens[0] == "edge" || tokens[0] == "setcover" ||
                 tokens[0] == "set") {
        payload += body + "\n";
      } else if (tokens[0] == "two-color") {
        prov.two_color = true;
      }
      continue;
    }
    if (is_blank(line)) continue;
    if (line.rfind("poly ", 0) == 0 || line == "poly") {
      auto tokens = tokenize(line);
      if (tokens.size() != 2) throw ParseError("poly line wants exactly one name");
      blocks.emplace_back(tokens[1], "");
      continue;
    }
    if (blocks.empty()) throw ParseError("grid line '" + line + "' outside a piece block");
    blocks.back().second += line + "\n";
  }

  std::vector<std::pair<std::string, Polyomino>> pieces;
  for (auto& [name, body] : blocks) {
    try {
      pieces.emplace_back(name, parse_polyomino(body));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError("piece " + name + ": " + e.what());
    }
  }

  if (prov.kind == Provenance::Kind::Coloring) {
    if (payload.empty()) throw ParseError("coloring provenance without graph comments");
    prov.graph = parse_graph(payload);
  } else if (prov.kind == Provenance::Kind::SetCover) {
    if (payload.empty()) throw ParseError("setcover provenance without setcover comments");
    prov.cover = parse_setcover(payload);
  }

  try {
    return InstanceFile{Instance(std::move(pieces)), std::move(prov)};
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string emit_instance(const Instance& inst, const Provenance& prov) {
  std::string out;
  auto comment_block = [&](const std::string& text) {
    for (const std::string& line : split_lines(text)) out += "# " + line + "\n";
  };
  if (prov.kind == Provenance::Kind::Coloring && prov.graph) {
    out += "# reduction: coloring |V|=" + std::to_string(prov.graph->n) + "\n";
    comment_block(emit_graph(*prov.graph));
  } else if (prov.kind == Provenance::Kind::SetCover && prov.cover) {
    out += "# reduction: setcover n=" + std::to_string(prov.cover->n) +
           " m=" + std::to_string(prov.cover->m()) + "\n";
    comment_block(emit_setcover(*prov.cover));
  }
  if (prov.two_color) out += "# two-color\n";
  if (!out.empty()) out += "\n";

  for (const auto& [name, poly] : inst.pieces) {
    out += "poly " + name + "\n";
    out += emit_polyomino(poly);
    out += "\n";
  }
  return out;
}

Layout parse_layout(std::string_view text, const Instance& inst) {
  Layout lay;
  int next = 0;
  for (const std::string& line : split_lines(text)) {
    if (is_blank(line) || is_comment(line)) continue;
    auto tokens = tokenize(line);
    if (tokens[0] != "place" || tokens.size() != 4)
      throw ParseError("layout lines are 'place <name> <dx> <dy>'");
    if (next >= inst.piece_count()) throw ParseError("more place lines than pieces");
    if (tokens[1] != inst.name(next))
      throw ParseError("expected piece '" + inst.name(next) + "', got '" + tokens[1] + "'");
    lay.push_back({parse_int(tokens[2], "dx"), parse_int(tokens[3], "dy")});
    ++next;
  }
  if (next != inst.piece_count())
    throw ParseError("layout names " + std::to_string(next) + " of " +
                     std::to_string(inst.piece_count()) + " pieces");
  return lay;
}

std::string emit_layout(const Instance& inst, const Layout& lay) {
  if (lay.size() != inst.pieces.size())
    throw PreconditionViolatedError("layout must carry one offset per piece");
  std::string out;
  for (int i = 0; i < inst.piece_count(); ++i)
    out += "place " + inst.name(i) + " " + std::to_string(lay[i].dx) + " " +
           std::to_string(lay[i].dy) + "\n";
  return out;
}

}  // namespace superpoly
