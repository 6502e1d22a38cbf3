#include "genart/report.hpp"

#include <algorithm>
#include <vector>

#include "genart/error.hpp"
#include "genart/image_io.hpp"

namespace genart {

namespace {

// Nearest-neighbor resample; hard edges survive, which is the point for
// inspecting glitch-style outputs.
Canvas scale_nearest(const Canvas& src, int w, int h) {
  Canvas out(w, h, src.background());
  for (int y = 0; y < h; ++y) {
    const int sy = static_cast<int>((static_cast<std::int64_t>(y) * src.height()) / h);
    for (int x = 0; x < w; ++x) {
      const int sx = static_cast<int>((static_cast<std::int64_t>(x) * src.width()) / w);
      out.set(x, y, src.at(sx, sy));
    }
  }
  return out;
}

}  // namespace

void collage(const std::filesystem::path& image_dir, int columns, int cell_width,
             int cell_height, const std::filesystem::path& out_path) {
  if (columns < 1) throw ConfigError("collage needs columns >= 1");
  if (cell_width < 1 || cell_height < 1)
    throw ConfigError("collage cell size must be positive");
  if (!std::filesystem::is_directory(image_dir))
    throw IoError("not a directory: " + image_dir.string());

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(image_dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<Canvas> cells;
  for (const auto& file : files) {
    try {
      cells.push_back(scale_nearest(read_png(file), cell_width, cell_height));
    } catch (const IoError&) {
      // Non-images alongside the PNGs are skipped.
    }
  }
  if (cells.empty())
    throw Error("no decodable images in " + image_dir.string());

  const int rows = static_cast<int>((cells.size() + columns - 1) / columns);
  Canvas out(columns * cell_width, rows * cell_height, {0, 0, 0});
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const int cx = static_cast<int>(i % columns) * cell_width;
    const int cy = static_cast<int>(i / columns) * cell_height;
    for (int y = 0; y < cell_height; ++y)
      for (int x = 0; x < cell_width; ++x)
        out.set(cx + x, cy + y, cells[i].at(x, y));
  }
  write_png(out_path, out);
}

ExpressionReport render_genome(const std::string& genome_text,
                               const TechniqueRegistry& registry, int width,
                               int height, std::uint64_t seed,
                               std::uint64_t budget_ms,
                               const std::filesystem::path& out_path) {
  const Genome genome = parse_genome(genome_text, registry);
  Expressed expressed =
      express(genome, registry, width, height, budget_ms * 1'000'000ULL, seed);
  write_png(out_path, expressed.canvas);
  return expressed.report;
}

}  // namespace genart
