#include "genart/color.hpp"

namespace genart {

const std::vector<Palette>& builtin_palettes() {
  static const std::vector<Palette> table = {
      {"noir", {10, 10, 12}, {{220, 220, 225}, {200, 40, 60}, {80, 200, 220}}},
      {"vapor",
       {25, 10, 40},
       {{255, 105, 180}, {0, 255, 255}, {150, 80, 255}, {250, 240, 120}}},
      {"ember",
       {15, 8, 5},
       {{255, 120, 30}, {220, 30, 40}, {255, 200, 60}, {255, 240, 220}}},
      {"glacier", {8, 14, 26}, {{180, 220, 255}, {60, 120, 255}, {40, 200, 180}}},
      {"meadow",
       {12, 20, 10},
       {{90, 200, 80}, {180, 240, 100}, {250, 220, 90}, {120, 200, 240}}},
      {"mono", {0, 0, 0}, {{255, 255, 255}, {160, 160, 160}, {90, 90, 90}}},
      {"sunset",
       {20, 8, 24},
       {{255, 0, 128}, {255, 140, 0}, {255, 200, 160}, {130, 60, 200}}},
      {"acid", {5, 5, 5}, {{170, 255, 0}, {255, 20, 147}, {0, 150, 255}}},
      {"paper", {235, 230, 220}, {{30, 30, 40}, {180, 40, 50}, {50, 70, 160}}},
      {"bruise",
       {18, 12, 20},
       {{120, 60, 160}, {60, 180, 120}, {70, 90, 220}, {230, 120, 150}}},
  };
  return table;
}

const Palette& palette_at(std::int64_t id) {
  const auto& table = builtin_palettes();
  if (id < 0) id = 0;
  if (id >= static_cast<std::int64_t>(table.size()))
    id = static_cast<std::int64_t>(table.size()) - 1;
  return table[static_cast<std::size_t>(id)];
}

}  // namespace genart
