#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace superpoly {

using ColorId = std::uint8_t;

struct PaletteEntry {
  char symbol;
  std::string name;
};

// An ordered color table. Index in the table is the ColorId; the symbol is the
// single character used in grid text, and '.' is reserved for empty cells.
class Palette {
 public:
  explicit Palette(std::vector<PaletteEntry> entries);

  // gray, black, red, green, blue, purple, orange (ids 0..6)
  static const Palette& canonical();

  std::size_t size() const { return entries_.size(); }
  char symbol(ColorId id) const { return entries_.at(id).symbol; }
  const std::string& name(ColorId id) const { return entries_.at(id).name; }
  std::optional<ColorId> by_symbol(char c) const;
  std::optional<ColorId> by_name(std::string_view n) const;

 private:
  std::vector<PaletteEntry> entries_;
};

inline constexpr ColorId kGray = 0;
inline constexpr ColorId kBlack = 1;
inline constexpr ColorId kRed = 2;
inline constexpr ColorId kGreen = 3;
inline constexpr ColorId kBlue = 4;
inline constexpr ColorId kPurple = 5;
inline constexpr ColorId kOrange = 6;

}  // namespace superpoly
