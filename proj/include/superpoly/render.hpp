#pragma once

#include <string>
#include <string_view>

#include "superpoly/instance.hpp"

namespace superpoly {

// One unit square per cell, filled with the color's name, 1px grid stroke,
// y flipped so larger y draws higher.
std::string render_svg(const Polyomino& p, std::string_view id = "piece");

// One <g> per piece, laid out side by side in instance order.
std::string render_svg(const Instance& inst);

}  // namespace superpoly
