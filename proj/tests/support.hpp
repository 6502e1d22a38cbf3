#pragma once

// Shared test fixtures and independent oracles. Everything in here stays
// test-only; the oracles deliberately avoid the library's implementation
// paths for the quantities they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "genart/canvas.hpp"
#include "genart/classifier.hpp"
#include "genart/fitness.hpp"
#include "genart/rng.hpp"
#include "genart/techniques.hpp"

namespace testsupport {

// Clock that advances a fixed step on every reading; expression budget
// behavior becomes a pure function of the step.
class ManualClock final : public genart::Clock {
 public:
  explicit ManualClock(std::uint64_t step_ns) : step_(step_ns) {}
  std::uint64_t now_ns() const override { return now_ += step_; }

 private:
  std::uint64_t step_;
  mutable std::uint64_t now_ = 0;
};

// Unique, pre-created directory under the test working directory.
inline std::filesystem::path temp_dir(const std::string& name) {
  const auto dir = std::filesystem::path("test_tmp") / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// --- independent pixel-metric oracles (naive x/y/channel loops) ---

inline double naive_rms(const genart::Canvas& a, const genart::Canvas& b) {
  std::uint64_t sum = 0;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      const genart::Rgb pa = a.at(x, y);
      const genart::Rgb pb = b.at(x, y);
      const std::int64_t dr = std::int64_t(pa.r) - pb.r;
      const std::int64_t dg = std::int64_t(pa.g) - pb.g;
      const std::int64_t db = std::int64_t(pa.b) - pb.b;
      sum += std::uint64_t(dr * dr + dg * dg + db * db);
    }
  }
  const double n = 3.0 * a.width() * a.height();
  return std::sqrt(static_cast<double>(sum) / n);
}

inline double naive_chebyshev(const genart::Canvas& a, const genart::Canvas& b) {
  int best = 0;
  for (int y = 0; y < a.height(); ++y) {
    for (int x = 0; x < a.width(); ++x) {
      const genart::Rgb pa = a.at(x, y);
      const genart::Rgb pb = b.at(x, y);
      best = std::max(best, std::abs(int(pa.r) - pb.r));
      best = std::max(best, std::abs(int(pa.g) - pb.g));
      best = std::max(best, std::abs(int(pa.b) - pb.b));
    }
  }
  return best;
}

// --- classic Lexicase oracle: strict best per objective, fixed order ---

inline std::vector<std::size_t> classic_lexicase_pool(
    const std::vector<genart::FitnessVector>& population,
    const std::vector<genart::Objective>& order) {
  std::vector<std::size_t> pool(population.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  for (genart::Objective o : order) {
    if (pool.size() <= 1) break;
    const bool maximize = genart::is_maximize(o);
    double best = 0.0;
    bool first = true;
    for (std::size_t i : pool) {
      const double v = maximize ? population[i][o] : -population[i][o];
      if (first || v > best) best = v, first = false;
    }
    std::vector<std::size_t> kept;
    for (std::size_t i : pool) {
      const double v = maximize ? population[i][o] : -population[i][o];
      if (v == best) kept.push_back(i);
    }
    pool = kept;
  }
  return pool;
}

// --- synthetic imagery ---

// Uniform random RGB pixels.
inline genart::Canvas noise_canvas(int w, int h, std::uint64_t seed) {
  genart::Rng rng(seed);
  genart::Canvas c(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      c.set(x, y,
            {static_cast<std::uint8_t>(rng.uniform_int(0, 255)),
             static_cast<std::uint8_t>(rng.uniform_int(0, 255)),
             static_cast<std::uint8_t>(rng.uniform_int(0, 255))});
  return c;
}

// Smooth structured image: a few random low-frequency sinusoid ramps per
// channel. Stands in for "art" when training synthetic models.
inline genart::Canvas smooth_canvas(int w, int h, std::uint64_t seed) {
  genart::Rng rng(seed);
  const double ax = rng.uniform_real(0.5, 2.0), ay = rng.uniform_real(0.5, 2.0);
  const double px = rng.uniform_real(0.0, 6.28), py = rng.uniform_real(0.0, 6.28);
  const double base[3] = {rng.uniform_real(0.2, 0.8), rng.uniform_real(0.2, 0.8),
                          rng.uniform_real(0.2, 0.8)};
  genart::Canvas c(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double v = 0.5 + 0.5 * std::sin(ax * 6.28 * x / w + px) *
                                 std::sin(ay * 6.28 * y / h + py);
      genart::Rgb color;
      color.r = static_cast<std::uint8_t>(std::min(255.0, 255.0 * base[0] * v));
      color.g = static_cast<std::uint8_t>(std::min(255.0, 255.0 * base[1] * v));
      color.b = static_cast<std::uint8_t>(std::min(255.0, 255.0 * base[2] * v));
      c.set(x, y, color);
    }
  }
  return c;
}

// 3x3 box blur with clamped edges.
inline genart::Canvas box_blur3(const genart::Canvas& src) {
  genart::Canvas out(src.width(), src.height(), src.background());
  for (int y = 0; y < src.height(); ++y) {
    for (int x = 0; x < src.width(); ++x) {
      int sum[3] = {0, 0, 0};
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          const int sx = std::clamp(x + dx, 0, src.width() - 1);
          const int sy = std::clamp(y + dy, 0, src.height() - 1);
          const genart::Rgb p = src.at(sx, sy);
          sum[0] += p.r;
          sum[1] += p.g;
          sum[2] += p.b;
        }
      }
      out.set(x, y,
              {static_cast<std::uint8_t>(sum[0] / 9),
               static_cast<std::uint8_t>(sum[1] / 9),
               static_cast<std::uint8_t>(sum[2] / 9)});
    }
  }
  return out;
}

// Centroid model trained on small synthetic corpora (smooth = art,
// uniform noise = not art), written under `dir`.
genart::CentroidModel make_synthetic_model(const std::filesystem::path& dir,
                                           int per_class = 8, int size = 64,
                                           std::uint64_t seed = 7);

// Minimal single-technique registry for genome-level tests: `dot` takes no
// parameters and paints one pixel.
genart::TechniqueRegistry dot_registry();

}  // namespace testsupport
