#pragma once

#include <array>
#include <cstdint>

namespace genart {

// Fractal 2-D gradient noise. Each octave is classic Perlin noise over a
// seed-shuffled 256-entry permutation table; octave k contributes with
// amplitude falloff^k at doubled frequency, and the sum is renormalized so
// value() stays in [-1, 1]. Zero at integer lattice points when octaves == 1.
class NoiseField {
 public:
  NoiseField(std::uint64_t seed, int octaves, double falloff, double scale);

  std::uint64_t seed() const { return seed_; }
  int octaves() const { return octaves_; }
  double falloff() const { return falloff_; }
  double scale() const { return scale_; }

  // Fractal noise at canvas coordinates (x, y), in [-1, 1].
  double value(double x, double y) const;

  // value(x, y) mapped linearly onto [-2pi, 2pi].
  double angle(double x, double y) const;

 private:
  double base(double x, double y) const;  // one octave, [-1, 1]

  std::uint64_t seed_;
  int octaves_;
  double falloff_;
  double scale_;
  std::array<std::uint8_t, 512> perm_;
};

}  // namespace genart
