#include "superpoly/render.hpp"

#include <algorithm>
#include <string>

namespace superpoly {
namespace {

constexpr int kScale = 16;

void append_cells(std::string& out, const Polyomino& p, int x_base, int row_height,
                  std::string_view id) {
  const Palette& palette = Palette::canonical();
  out += "  <g id=\"" + std::string(id) + "\">\n";
  for (const auto& [c, color] : p.cells()) {
    int px = (x_base + c.x) * kScale;
    int py = (row_height - 1 - c.y) * kScale;
    out += "    <rect x=\"" + std::to_string(px) + "\" y=\"" + std::to_string(py) +
           "\" width=\"" + std::to_string(kScale) + "\" height=\"" + std::to_string(kScale) +
           "\" fill=\"" + palette.name(color) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  out += "  </g>\n";
}

std::string svg_open(int width_cells, int height_cells) {
  int w = width_cells * kScale, h = height_cells * kScale;
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
         "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
         std::to_string(h) + "\">\n";
}

}  // namespace

std::string render_svg(const Polyomino& p, std::string_view id) {
  std::string out = svg_open(p.width(), p.height());
  append_cells(out, p, 0, p.height(), id);
  out += "</svg>\n";
  return out;
}

std::string render_svg(const Instance& inst) {
  int total_w = 0, max_h = 0;
  for (const auto& [name, p] : inst.pieces) {
    total_w += p.width() + 1;
    max_h = std::max(max_h, p.height());
  }
  total_w = std::max(total_w - 1, 1);

  std::string out = svg_open(total_w, max_h);
  int x_base = 0;
  for (const auto& [name, p] : inst.pieces) {
    append_cells(out, p, x_base, max_h, name);
    x_base += p.width() + 1;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace superpoly
