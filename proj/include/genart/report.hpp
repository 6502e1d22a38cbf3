#pragma once

#include <filesystem>

#include "genart/techniques.hpp"

namespace genart {

// Tiles every decodable image in `image_dir` (sorted by filename) into a
// grid of `columns` columns, each cell nearest-neighbor scaled to
// cell_width x cell_height. Trailing cells stay background-filled.
void collage(const std::filesystem::path& image_dir, int columns, int cell_width,
             int cell_height, const std::filesystem::path& out_path);

// Parses genome text, expresses it at the given size/seed/budget, and writes
// the PNG. Returns the expression report.
ExpressionReport render_genome(const std::string& genome_text,
                               const TechniqueRegistry& registry, int width,
                               int height, std::uint64_t seed,
                               std::uint64_t budget_ms,
                               const std::filesystem::path& out_path);

}  // namespace genart
