#include "support.hpp"

#include "genart/image_io.hpp"

namespace testsupport {

genart::CentroidModel make_synthetic_model(const std::filesystem::path& dir,
                                           int per_class, int size,
                                           std::uint64_t seed) {
  const auto art_dir = dir / "art";
  const auto notart_dir = dir / "notart";
  std::filesystem::create_directories(art_dir);
  std::filesystem::create_directories(notart_dir);
  char name[32];
  for (int i = 0; i < per_class; ++i) {
    std::snprintf(name, sizeof name, "img_%03d.png", i);
    genart::write_png(art_dir / name, smooth_canvas(size, size, seed + i));
    genart::write_png(notart_dir / name,
                      noise_canvas(size, size, seed + 1000 + i));
  }
  return genart::train_centroid_model(art_dir, notart_dir);
}

genart::TechniqueRegistry dot_registry() {
  genart::TechniqueRegistry reg;
  reg.add({"dot", {}, false},
          [](genart::Canvas& canvas, const genart::TechniqueGene&, genart::Rng& rng) {
            canvas.set(static_cast<int>(rng.index(canvas.width())),
                       static_cast<int>(rng.index(canvas.height())),
                       {255, 255, 255});
          });
  return reg;
}

}  // namespace testsupport
