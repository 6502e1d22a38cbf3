#include "genart/canvas.hpp"

#include <algorithm>
#include <cmath>

#include "genart/error.hpp"

namespace genart {

Canvas::Canvas(int width, int height, Rgb background)
    : width_(width), height_(height), background_(background) {
  if (width <= 0 || height <= 0)
    throw ConfigError("canvas dimensions must be positive");
  px_.resize(3 * static_cast<std::size_t>(width) * height);
  fill(background);
}

void Canvas::fill(Rgb c) {
  for (std::size_t i = 0; i < px_.size(); i += 3) {
    px_[i] = c.r;
    px_[i + 1] = c.g;
    px_[i + 2] = c.b;
  }
}

void Canvas::stamp_square(int cx, int cy, int size, Rgb c) {
  if (size <= 0) return;
  const int lo = -(size / 2);
  const int hi = (size - 1) / 2;
  for (int dy = lo; dy <= hi; ++dy)
    for (int dx = lo; dx <= hi; ++dx) set(cx + dx, cy + dy, c);
}

void Canvas::fill_circle(double cx, double cy, double radius, Rgb c) {
  if (radius <= 0) return;
  const int y0 = std::max(0, static_cast<int>(std::floor(cy - radius)));
  const int y1 = std::min(height_ - 1, static_cast<int>(std::ceil(cy + radius)));
  const double r2 = radius * radius;
  for (int y = y0; y <= y1; ++y) {
    const double dy = y - cy;
    const double span2 = r2 - dy * dy;
    if (span2 < 0) continue;
    const double span = std::sqrt(span2);
    const int x0 = std::max(0, static_cast<int>(std::floor(cx - span)));
    const int x1 = std::min(width_ - 1, static_cast<int>(std::ceil(cx + span)));
    for (int x = x0; x <= x1; ++x) {
      const double dx = x - cx;
      if (dx * dx + dy * dy <= r2) set(x, y, c);
    }
  }
}

void Canvas::vertical_span(int x, int y0, int y1, int thickness, Rgb c) {
  if (y0 > y1) std::swap(y0, y1);
  if (thickness < 1) thickness = 1;
  const int lo = -(thickness / 2);
  const int hi = (thickness - 1) / 2;
  for (int y = y0; y <= y1; ++y)
    for (int dx = lo; dx <= hi; ++dx) set(x + dx, y, c);
}

}  // namespace genart
