#include "genart/features.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

namespace genart {

namespace {

constexpr int kSpectrumSize = 128;  // downsample target, power of two

std::vector<double> to_grayscale(const Canvas& c) {
  std::vector<double> gray(static_cast<std::size_t>(c.width()) * c.height());
  const auto px = c.pixels();
  for (std::size_t i = 0, j = 0; i < px.size(); i += 3, ++j)
    gray[j] = (0.299 * px[i] + 0.587 * px[i + 1] + 0.114 * px[i + 2]) / 255.0;
  return gray;
}

// Area-mean downsample to kSpectrumSize^2; degenerates to nearest-neighbor
// when a destination cell covers no full source pixel.
std::vector<double> downsample(const std::vector<double>& gray, int w, int h) {
  std::vector<double> out(kSpectrumSize * kSpectrumSize);
  for (int dy = 0; dy < kSpectrumSize; ++dy) {
    int y0 = dy * h / kSpectrumSize;
    int y1 = (dy + 1) * h / kSpectrumSize;
    if (y1 <= y0) y1 = y0 + 1;
    for (int dx = 0; dx < kSpectrumSize; ++dx) {
      int x0 = dx * w / kSpectrumSize;
      int x1 = (dx + 1) * w / kSpectrumSize;
      if (x1 <= x0) x1 = x0 + 1;
      double sum = 0.0;
      for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x)
          sum += gray[static_cast<std::size_t>(y) * w + x];
      out[static_cast<std::size_t>(dy) * kSpectrumSize + dx] =
          sum / ((y1 - y0) * (x1 - x0));
    }
  }
  return out;
}

// In-place iterative radix-2 FFT, n a power of two.
void fft(std::complex<double>* a, int n) {
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * std::numbers::pi / len;
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (int i = 0; i < n; i += len) {
      std::complex<double> w(1.0);
      for (int k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// 16 log-spaced radial bands of the 2-D power spectrum, each the fraction
// of total AC power. All zeros for a constant image.
std::array<double, 16> radial_spectrum(const std::vector<double>& img) {
  const int n = kSpectrumSize;
  std::vector<std::complex<double>> data(img.begin(), img.end());

  for (int y = 0; y < n; ++y) fft(data.data() + static_cast<std::size_t>(y) * n, n);
  std::vector<std::complex<double>> col(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) col[y] = data[static_cast<std::size_t>(y) * n + x];
    fft(col.data(), n);
    for (int y = 0; y < n; ++y) data[static_cast<std::size_t>(y) * n + x] = col[y];
  }

  constexpr double r_min = 1.0;
  const double r_max = std::hypot(n / 2.0, n / 2.0) + 1e-9;
  const double log_span = std::log(r_max / r_min);

  std::array<double, 16> bands{};
  double total = 0.0;
  for (int y = 0; y < n; ++y) {
    const int fy = y <= n / 2 ? y : y - n;
    for (int x = 0; x < n; ++x) {
      const int fx = x <= n / 2 ? x : x - n;
      if (fx == 0 && fy == 0) continue;  // DC
      const double power = std::norm(data[static_cast<std::size_t>(y) * n + x]);
      const double r = std::hypot(static_cast<double>(fx), static_cast<double>(fy));
      int band = static_cast<int>(16.0 * std::log(std::max(r, r_min) / r_min) / log_span);
      band = std::clamp(band, 0, 15);
      bands[band] += power;
      total += power;
    }
  }
  if (total > 1e-12)
    for (double& b : bands) b /= total;
  else
    bands.fill(0.0);
  return bands;
}

}  // namespace

double near_background_fraction(const Canvas& canvas, Rgb background,
                                int tolerance) {
  const auto px = canvas.pixels();
  std::size_t hits = 0;
  for (std::size_t i = 0; i < px.size(); i += 3) {
    if (std::abs(int(px[i]) - int(background.r)) <= tolerance &&
        std::abs(int(px[i + 1]) - int(background.g)) <= tolerance &&
        std::abs(int(px[i + 2]) - int(background.b)) <= tolerance)
      ++hits;
  }
  return static_cast<double>(hits) / (px.size() / 3);
}

FeatureVector extract_features(const Canvas& canvas) {
  FeatureVector f(kFeatureDim, 0.0);
  const auto px = canvas.pixels();
  const int w = canvas.width();
  const int h = canvas.height();
  const double n_pixels = static_cast<double>(w) * h;

  // Channel histograms, means, variances.
  double sum[3] = {0, 0, 0};
  double sum_sq[3] = {0, 0, 0};
  for (std::size_t i = 0; i < px.size(); i += 3) {
    for (int c = 0; c < 3; ++c) {
      const std::uint8_t v = px[i + c];
      f[kFeatChannelHist + 8 * c + (v >> 5)] += 1.0;
      const double x = v / 255.0;
      sum[c] += x;
      sum_sq[c] += x * x;
    }
  }
  for (int c = 0; c < 3; ++c) {
    for (int b = 0; b < 8; ++b) f[kFeatChannelHist + 8 * c + b] /= n_pixels;
    const double mean = sum[c] / n_pixels;
    f[kFeatChannelMean + c] = mean;
    f[kFeatChannelVar + c] = std::max(0.0, sum_sq[c] / n_pixels - mean * mean);
  }

  const std::vector<double> gray = to_grayscale(canvas);

  // Gradient histogram, edge fraction, Laplacian variance over the interior.
  if (w >= 3 && h >= 3) {
    constexpr double kGradMax = 0.70711;  // central differences peak at sqrt(.5)
    constexpr double kEdgeThreshold = 0.05;
    const double n_interior = static_cast<double>(w - 2) * (h - 2);
    double lap_sum = 0.0, lap_sq = 0.0, edges = 0.0;
    for (int y = 1; y < h - 1; ++y) {
      for (int x = 1; x < w - 1; ++x) {
        const std::size_t i = static_cast<std::size_t>(y) * w + x;
        const double gx = (gray[i + 1] - gray[i - 1]) / 2.0;
        const double gy = (gray[i + w] - gray[i - w]) / 2.0;
        const double mag = std::hypot(gx, gy);
        int bin = static_cast<int>(8.0 * mag / kGradMax);
        f[kFeatGradientHist + std::clamp(bin, 0, 7)] += 1.0;
        if (mag > kEdgeThreshold) edges += 1.0;
        const double lap =
            gray[i + 1] + gray[i - 1] + gray[i + w] + gray[i - w] - 4.0 * gray[i];
        lap_sum += lap;
        lap_sq += lap * lap;
      }
    }
    for (int b = 0; b < 8; ++b) f[kFeatGradientHist + b] /= n_interior;
    const double lap_mean = lap_sum / n_interior;
    f[kFeatLaplacianVar] = std::max(0.0, lap_sq / n_interior - lap_mean * lap_mean);
    f[kFeatEdgeFraction] = edges / n_interior;
  }

  // Grayscale entropy (bits, 256 bins).
  {
    std::array<double, 256> hist{};
    for (double g : gray) {
      int bin = static_cast<int>(g * 255.0 + 0.5);
      ++hist[std::clamp(bin, 0, 255)];
    }
    double entropy = 0.0;
    for (double c : hist) {
      if (c > 0) {
        const double p = c / n_pixels;
        entropy -= p * std::log2(p);
      }
    }
    f[kFeatEntropy] = entropy;
  }

  // Radial power spectrum of the downsampled grayscale.
  {
    const auto bands = radial_spectrum(downsample(gray, w, h));
    for (int b = 0; b < 16; ++b) f[kFeatSpectrum + b] = bands[b];
  }

  f[kFeatBackgroundFraction] =
      near_background_fraction(canvas, canvas.background(), 8);

  return f;
}

}  // namespace genart
