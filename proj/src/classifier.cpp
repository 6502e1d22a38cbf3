#include "genart/classifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "genart/error.hpp"
#include "genart/image_io.hpp"
#include "genart/rng.hpp"

namespace genart {

namespace {

void write_vector(std::ofstream& out, const FeatureVector& v) {
  char buf[64];
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", v[i]);
    if (i) out << ' ';
    out << buf;
  }
  out << '\n';
}

FeatureVector read_vector(std::istream& in, int dimension, const std::string& what) {
  std::string line;
  if (!std::getline(in, line))
    throw ModelError("model file truncated while reading " + what);
  std::istringstream ss(line);
  FeatureVector v;
  double x;
  while (ss >> x) v.push_back(x);
  if (static_cast<int>(v.size()) != dimension)
    throw ModelError("model file: " + what + " has " + std::to_string(v.size()) +
                     " value(s), expected " + std::to_string(dimension));
  return v;
}

std::vector<std::filesystem::path> sorted_image_files(
    const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw IoError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

double standardized_distance(const FeatureVector& standardized,
                             const FeatureVector& centroid) {
  double sum = 0.0;
  for (std::size_t i = 0; i < standardized.size(); ++i) {
    const double d = standardized[i] - centroid[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace

void CentroidModel::save(const std::filesystem::path& path) const {
  if (!trained()) throw ModelError("refusing to save an untrained model");
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << extractor_id << '\n' << dimension << '\n';
  write_vector(out, scale);
  write_vector(out, art_centroid);
  write_vector(out, notart_centroid);
  if (!out) throw IoError("write failed: " + path.string());
}

CentroidModel CentroidModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  CentroidModel m;
  if (!std::getline(in, m.extractor_id))
    throw ModelError("model file missing extractor id: " + path.string());
  std::string dim_line;
  if (!std::getline(in, dim_line))
    throw ModelError("model file missing dimension: " + path.string());
  auto [ptr, ec] =
      std::from_chars(dim_line.data(), dim_line.data() + dim_line.size(), m.dimension);
  if (ec != std::errc{} || m.dimension <= 0)
    throw ModelError("bad dimension line in " + path.string());
  m.scale = read_vector(in, m.dimension, "scale");
  m.art_centroid = read_vector(in, m.dimension, "art centroid");
  m.notart_centroid = read_vector(in, m.dimension, "not-art centroid");
  for (double s : m.scale)
    if (!(s > 0)) throw ModelError("non-positive scale entry in " + path.string());
  return m;
}

CentroidModel train_centroid_model(const std::filesystem::path& art_dir,
                                   const std::filesystem::path& notart_dir) {
  auto extract_dir = [](const std::filesystem::path& dir) {
    std::vector<FeatureVector> features;
    for (const auto& file : sorted_image_files(dir)) {
      try {
        features.push_back(extract_features(read_png(file)));
      } catch (const IoError&) {
        // Non-images in the corpus directory are skipped.
      }
    }
    if (features.size() < 2)
      throw TrainingError("corpus needs >= 2 decodable images: " + dir.string());
    return features;
  };

  const auto art = extract_dir(art_dir);
  const auto notart = extract_dir(notart_dir);

  CentroidModel m;
  m.extractor_id = kExtractorId;
  m.dimension = kFeatureDim;
  m.scale.assign(kFeatureDim, 0.0);

  // Pooled per-dimension standard deviation, floored so constant dimensions
  // do not explode the standardized space.
  const double n = static_cast<double>(art.size() + notart.size());
  FeatureVector mean(kFeatureDim, 0.0);
  for (const auto* set : {&art, &notart})
    for (const auto& v : *set)
      for (int i = 0; i < kFeatureDim; ++i) mean[i] += v[i];
  for (int i = 0; i < kFeatureDim; ++i) mean[i] /= n;
  for (const auto* set : {&art, &notart})
    for (const auto& v : *set)
      for (int i = 0; i < kFeatureDim; ++i) {
        const double d = v[i] - mean[i];
        m.scale[i] += d * d;
      }
  for (int i = 0; i < kFeatureDim; ++i)
    m.scale[i] = std::max(std::sqrt(m.scale[i] / n), 1e-9);

  auto centroid = [&m](const std::vector<FeatureVector>& set) {
    FeatureVector c(kFeatureDim, 0.0);
    for (const auto& v : set)
      for (int i = 0; i < kFeatureDim; ++i) c[i] += v[i] / m.scale[i];
    for (int i = 0; i < kFeatureDim; ++i) c[i] /= static_cast<double>(set.size());
    return c;
  };
  m.art_centroid = centroid(art);
  m.notart_centroid = centroid(notart);
  return m;
}

double model_score(const FeatureVector& features, const CentroidModel& model) {
  if (!model.trained()) throw ModelError("model is not trained");
  if (model.extractor_id != kExtractorId)
    throw ModelError("model extractor '" + model.extractor_id +
                     "' does not match running extractor '" + kExtractorId + "'");
  if (static_cast<int>(features.size()) != model.dimension)
    throw ModelError("feature dimension mismatch");

  FeatureVector standardized(features.size());
  for (std::size_t i = 0; i < features.size(); ++i)
    standardized[i] = features[i] / model.scale[i];

  const double d_art = standardized_distance(standardized, model.art_centroid);
  const double d_notart = standardized_distance(standardized, model.notart_centroid);
  if (d_art + d_notart == 0.0) return 0.5;
  return d_art / (d_art + d_notart);
}

double model_score(const Canvas& canvas, const CentroidModel& model) {
  return model_score(extract_features(canvas), model);
}

ArtLabel model_label(const Canvas& canvas, const CentroidModel& model) {
  return model_score(canvas, model) < 0.5 ? ArtLabel::Art : ArtLabel::NotArt;
}

void generate_noise_corpus(int count, int width, int height, std::uint64_t seed,
                           const std::filesystem::path& out_dir) {
  if (count < 1) throw ConfigError("noise corpus count must be >= 1");
  std::filesystem::create_directories(out_dir);

  for (int k = 0; k < count; ++k) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
    Canvas canvas(width, height);
    for (int y = 0; y < height; ++y)
      for (int x = 0; x < width; ++x)
        canvas.set(x, y,
                   {static_cast<std::uint8_t>(rng.uniform_int(0, 255)),
                    static_cast<std::uint8_t>(rng.uniform_int(0, 255)),
                    static_cast<std::uint8_t>(rng.uniform_int(0, 255))});
    char name[32];
    std::snprintf(name, sizeof name, "noise_%04d.png", k);
    write_png(out_dir / name, canvas);
  }
}

void BatchReport::write_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "path,score,label\n";
  char buf[64];
  for (const auto& e : entries) {
    std::snprintf(buf, sizeof buf, "%.6f", e.score);
    out << e.path << ',' << buf << ',' << art_label_name(e.label) << '\n';
  }
}

BatchReport classify_batch(const std::filesystem::path& image_dir,
                           const CentroidModel& model) {
  BatchReport report;
  for (const auto& file : sorted_image_files(image_dir)) {
    try {
      const Canvas canvas = read_png(file);
      BatchEntry entry;
      entry.path = file.string();
      entry.score = model_score(canvas, model);
      entry.label = entry.score < 0.5 ? ArtLabel::Art : ArtLabel::NotArt;
      (entry.label == ArtLabel::Art ? report.art_count : report.notart_count)++;
      report.entries.push_back(std::move(entry));
    } catch (const IoError&) {
      report.failures.push_back(file.string());
    }
  }
  return report;
}

}  // namespace genart
