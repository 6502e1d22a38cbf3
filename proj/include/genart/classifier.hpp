#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "genart/canvas.hpp"
#include "genart/features.hpp"

namespace genart {

enum class ArtLabel { Art, NotArt };

inline const char* art_label_name(ArtLabel l) {
  return l == ArtLabel::Art ? "art" : "not-art";
}

// Class-mean feature vectors for "art" and "not art", plus the pooled
// per-dimension standard deviations used to put distances on one scale.
struct CentroidModel {
  std::string extractor_id;
  int dimension = 0;
  FeatureVector scale;            // standardization divisors, all > 0
  FeatureVector art_centroid;     // means of standardized vectors
  FeatureVector notart_centroid;

  bool trained() const {
    return dimension > 0 && static_cast<int>(scale.size()) == dimension &&
           static_cast<int>(art_centroid.size()) == dimension &&
           static_cast<int>(notart_centroid.size()) == dimension;
  }

  // Text format: extractor id line, dimension line, then the three vectors
  // (scale, art, not-art) one per line with full precision.
  void save(const std::filesystem::path& path) const;
  static CentroidModel load(const std::filesystem::path& path);
};

// Builds centroids from two image directories (each needs >= 2 decodable
// images). Scale = pooled per-dimension standard deviation, floored at 1e-9.
CentroidModel train_centroid_model(const std::filesystem::path& art_dir,
                                   const std::filesystem::path& notart_dir);

// d_art / (d_art + d_notart) on standardized features, in [0, 1]; 0.5 when
// both distances vanish. Lower is closer to "art".
double model_score(const FeatureVector& features, const CentroidModel& model);
double model_score(const Canvas& canvas, const CentroidModel& model);

// Art iff score < 0.5; ties label not-art.
ArtLabel model_label(const Canvas& canvas, const CentroidModel& model);

// Writes `count` PNGs of uniform independent RGB pixels.
void generate_noise_corpus(int count, int width, int height, std::uint64_t seed,
                           const std::filesystem::path& out_dir);

struct BatchEntry {
  std::string path;
  double score = 0.0;
  ArtLabel label = ArtLabel::NotArt;
};

struct BatchReport {
  std::vector<BatchEntry> entries;
  std::vector<std::string> failures;  // undecodable files, not fatal
  int art_count = 0;
  int notart_count = 0;

  // CSV with header `path,score,label`.
  void write_csv(const std::filesystem::path& path) const;
};

// Scores every decodable image in the directory (sorted by filename).
BatchReport classify_batch(const std::filesystem::path& image_dir,
                           const CentroidModel& model);

}  // namespace genart
