#include "genart/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <memory>
#include <unordered_map>

#include "genart/error.hpp"

namespace genart {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

Rgb modal_color(const Canvas& c) {
  std::unordered_map<std::uint32_t, int> counts;
  const auto px = c.pixels();
  for (std::size_t i = 0; i < px.size(); i += 3) {
    const std::uint32_t key = (std::uint32_t(px[i]) << 16) |
                              (std::uint32_t(px[i + 1]) << 8) | px[i + 2];
    ++counts[key];
  }
  std::uint32_t best_key = 0;
  int best = -1;
  for (const auto& [key, n] : counts) {
    // Ties broken toward the smaller packed value for determinism.
    if (n > best || (n == best && key < best_key)) {
      best = n;
      best_key = key;
    }
  }
  return {std::uint8_t(best_key >> 16), std::uint8_t(best_key >> 8),
          std::uint8_t(best_key)};
}

}  // namespace

void write_png(const std::filesystem::path& path, const Canvas& canvas) {
  FilePtr fp(std::fopen(path.string().c_str(), "wb"));
  if (!fp) throw IoError("cannot open for writing: " + path.string());

  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("png write failed: " + path.string());
  }

  png_init_io(png, fp.get());
  png_set_compression_level(png, 6);
  png_set_IHDR(png, info, canvas.width(), canvas.height(), 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  const std::uint8_t* base = canvas.pixels().data();
  const std::size_t stride = 3 * static_cast<std::size_t>(canvas.width());
  for (int y = 0; y < canvas.height(); ++y)
    png_write_row(png, const_cast<png_bytep>(base + y * stride));
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

Canvas read_png(const std::filesystem::path& path) {
  FilePtr fp(std::fopen(path.string().c_str(), "rb"));
  if (!fp) throw IoError("cannot open for reading: " + path.string());

  unsigned char header[8];
  if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8))
    throw IoError("not a PNG file: " + path.string());

  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("png decode failed: " + path.string());
  }

  png_init_io(png, fp.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  png_set_strip_16(png);
  png_set_packing(png);
  png_set_expand(png);
  if (png_get_color_type(png, info) & PNG_COLOR_MASK_ALPHA)
    png_set_strip_alpha(png);
  if (png_get_color_type(png, info) == PNG_COLOR_TYPE_GRAY ||
      png_get_color_type(png, info) == PNG_COLOR_TYPE_GRAY_ALPHA)
    png_set_gray_to_rgb(png);
  png_read_update_info(png, info);

  const int w = static_cast<int>(png_get_image_width(png, info));
  const int h = static_cast<int>(png_get_image_height(png, info));
  const std::size_t stride = png_get_rowbytes(png, info);
  if (stride != 3 * static_cast<std::size_t>(w)) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("unexpected row stride in " + path.string());
  }

  Canvas canvas(w, h);
  std::vector<std::uint8_t> row(stride);
  for (int y = 0; y < h; ++y) {
    png_read_row(png, row.data(), nullptr);
    for (int x = 0; x < w; ++x)
      canvas.set(x, y, {row[3 * x], row[3 * x + 1], row[3 * x + 2]});
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  canvas.set_background(modal_color(canvas));
  return canvas;
}

}  // namespace genart
