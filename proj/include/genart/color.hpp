#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace genart {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// A background color plus at least two foreground colors.
struct Palette {
  std::string name;
  Rgb background;
  std::vector<Rgb> colors;
};

// Built-in palette table (>= 8 entries, indexed by the `palette` gene
// parameter).
const std::vector<Palette>& builtin_palettes();

// Palette lookup with index clamped into the table.
const Palette& palette_at(std::int64_t id);

}  // namespace genart
