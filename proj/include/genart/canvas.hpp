#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "genart/color.hpp"

namespace genart {

// Fixed-size row-major RGB raster. All drawing primitives clip to bounds;
// nothing here ever reads or writes outside the pixel buffer.
class Canvas {
 public:
  Canvas(int width, int height, Rgb background = {0, 0, 0});

  int width() const { return width_; }
  int height() const { return height_; }
  Rgb background() const { return background_; }

  // Retags the background color without touching pixels. Used when the
  // background is only known after pixels exist (decoded files).
  void set_background(Rgb c) { background_ = c; }

  bool in_bounds(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  Rgb at(int x, int y) const {
    const std::size_t i = 3 * (static_cast<std::size_t>(y) * width_ + x);
    return {px_[i], px_[i + 1], px_[i + 2]};
  }

  // Clipped single-pixel write.
  void set(int x, int y, Rgb c) {
    if (!in_bounds(x, y)) return;
    const std::size_t i = 3 * (static_cast<std::size_t>(y) * width_ + x);
    px_[i] = c.r;
    px_[i + 1] = c.g;
    px_[i + 2] = c.b;
  }

  void fill(Rgb c);

  // Filled axis-aligned square of side `size` centered on (cx, cy).
  void stamp_square(int cx, int cy, int size, Rgb c);

  // Filled disc, real-valued center and radius.
  void fill_circle(double cx, double cy, double radius, Rgb c);

  // Vertical run of pixels from y0 to y1 (either order) at column x,
  // `thickness` pixels wide.
  void vertical_span(int x, int y0, int y1, int thickness, Rgb c);

  std::span<const std::uint8_t> pixels() const { return px_; }

  friend bool operator==(const Canvas& a, const Canvas& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.px_ == b.px_;
  }

 private:
  int width_;
  int height_;
  Rgb background_;
  std::vector<std::uint8_t> px_;
};

}  // namespace genart
