#include "genart/noise.hpp"

#include <cmath>
#include <numbers>

#include "genart/error.hpp"
#include "genart/rng.hpp"

namespace genart {

namespace {

inline double fade(double t) {
  return t * t * t * (t * (t * 6.0 - 15.0) + 10.0);
}

inline double lerp(double a, double b, double t) { return a + t * (b - a); }

// Eight unit gradients; diagonal entries pre-normalized.
constexpr double kInvSqrt2 = 0.7071067811865476;
constexpr double kGradX[8] = {1, -1, 0, 0, kInvSqrt2, -kInvSqrt2, kInvSqrt2, -kInvSqrt2};
constexpr double kGradY[8] = {0, 0, 1, -1, kInvSqrt2, kInvSqrt2, -kInvSqrt2, -kInvSqrt2};

// Peak magnitude of one octave with unit gradients; the octave output is
// scaled by its inverse and clamped so the declared [-1, 1] range is exact.
constexpr double kOctaveAmplitude = kInvSqrt2;

}  // namespace

NoiseField::NoiseField(std::uint64_t seed, int octaves, double falloff, double scale)
    : seed_(seed), octaves_(octaves), falloff_(falloff), scale_(scale) {
  if (octaves < 1) throw ConfigError("noise octaves must be >= 1");
  if (!(falloff > 0.0 && falloff <= 1.0))
    throw ConfigError("noise falloff must be in (0, 1]");
  if (!(scale > 0.0)) throw ConfigError("noise scale must be > 0");

  Rng rng(mix_seed(0x6e6f697365ULL, seed));  // dedicated permutation stream
  std::array<std::uint8_t, 256> p;
  for (int i = 0; i < 256; ++i) p[i] = static_cast<std::uint8_t>(i);
  for (int i = 255; i > 0; --i) {
    const std::size_t j = rng.index(static_cast<std::size_t>(i) + 1);
    std::swap(p[i], p[j]);
  }
  for (int i = 0; i < 256; ++i) perm_[i] = perm_[i + 256] = p[i];
}

double NoiseField::base(double x, double y) const {
  const int xi = static_cast<int>(std::floor(x)) & 255;
  const int yi = static_cast<int>(std::floor(y)) & 255;
  const double xf = x - std::floor(x);
  const double yf = y - std::floor(y);

  const int h00 = perm_[perm_[xi] + yi] & 7;
  const int h10 = perm_[perm_[xi + 1] + yi] & 7;
  const int h01 = perm_[perm_[xi] + yi + 1] & 7;
  const int h11 = perm_[perm_[xi + 1] + yi + 1] & 7;

  const double d00 = kGradX[h00] * xf + kGradY[h00] * yf;
  const double d10 = kGradX[h10] * (xf - 1) + kGradY[h10] * yf;
  const double d01 = kGradX[h01] * xf + kGradY[h01] * (yf - 1);
  const double d11 = kGradX[h11] * (xf - 1) + kGradY[h11] * (yf - 1);

  const double u = fade(xf);
  const double v = fade(yf);
  const double n = lerp(lerp(d00, d10, u), lerp(d01, d11, u), v);

  const double scaled = n / kOctaveAmplitude;
  if (scaled > 1.0) return 1.0;
  if (scaled < -1.0) return -1.0;
  return scaled;
}

double NoiseField::value(double x, double y) const {
  double sum = 0.0;
  double amp = 1.0;
  double amp_total = 0.0;
  double freq = scale_;
  for (int k = 0; k < octaves_; ++k) {
    sum += amp * base(x * freq, y * freq);
    amp_total += amp;
    amp *= falloff_;
    freq *= 2.0;
  }
  return sum / amp_total;
}

double NoiseField::angle(double x, double y) const {
  return value(x, y) * 2.0 * std::numbers::pi;
}

}  // namespace genart
