#pragma once

#include <vector>

#include "genart/canvas.hpp"

namespace genart {

using FeatureVector = std::vector<double>;

inline constexpr int kFeatureDim = 58;
inline constexpr const char* kExtractorId = "handcrafted-58-v1";

// Layout of the 58-dimension vector; indices are stable, the model file
// records kExtractorId so stale models are rejected.
inline constexpr int kFeatChannelHist = 0;   // 3 x 8 bins
inline constexpr int kFeatChannelMean = 24;  // r, g, b means on [0,1]
inline constexpr int kFeatChannelVar = 27;   // r, g, b variances
inline constexpr int kFeatGradientHist = 30; // 8 bins over gradient magnitude
inline constexpr int kFeatLaplacianVar = 38;
inline constexpr int kFeatEntropy = 39;
inline constexpr int kFeatSpectrum = 40;     // 16 log-spaced radial bands
inline constexpr int kFeatEdgeFraction = 56;
inline constexpr int kFeatBackgroundFraction = 57;

// Deterministic image descriptor: channel statistics, gradient and
// Laplacian responses, grayscale entropy, and a radially-averaged power
// spectrum of the 128x128 downsampled grayscale. Noise and blur move the
// spectral and Laplacian entries in opposite directions, which is what the
// art/not-art split keys on.
FeatureVector extract_features(const Canvas& canvas);

// Fraction of pixels whose every channel is within `tolerance` of
// `background` (shared by the negative-space objective and the feature
// extractor).
double near_background_fraction(const Canvas& canvas, Rgb background,
                                int tolerance);

}  // namespace genart
