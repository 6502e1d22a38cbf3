#pragma once

#include <filesystem>

#include "genart/canvas.hpp"

namespace genart {

// 8-bit RGB PNG, no alpha, fixed encoder settings so equal pixel buffers
// produce equal files.
void write_png(const std::filesystem::path& path, const Canvas& canvas);

// Decodes gray / palette / RGB / RGBA PNGs to 8-bit RGB. The loaded
// canvas's background is set to its most frequent pixel color, which is the
// best stand-in for the original background when only pixels survive.
Canvas read_png(const std::filesystem::path& path);

}  // namespace genart
