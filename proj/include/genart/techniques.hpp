#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "genart/canvas.hpp"
#include "genart/genome.hpp"

namespace genart {

// Injectable time source so budget behavior is testable with a synthetic
// clock.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual std::uint64_t now_ns() const = 0;
};

class SteadyClock final : public Clock {
 public:
  std::uint64_t now_ns() const override;
  static const SteadyClock& instance();
};

// --- the four built-in techniques ---
// Each draws a parsed gene onto the canvas; parameter layout is fixed by the
// descriptors in default_registry().

// flow-field: particles wander a Perlin angle field, plotting a point per
// step. The heavyweight technique: up to 5000 particles x 1000 steps.
void draw_flow_field(Canvas& canvas, const TechniqueGene& gene, Rng& rng);

// flow-field-2: streamlines traced from a regular grid; bounded work.
void draw_flow_field_2(Canvas& canvas, const TechniqueGene& gene, Rng& rng);

// circle-packing: rejection sampling with 1 px separation, then radius
// growth until contact, edge, or the max radius.
void draw_circle_packing(Canvas& canvas, const TechniqueGene& gene, Rng& rng);

// basic-trig: sine curves swept across the canvas, per-curve phase jitter.
void draw_basic_trig(Canvas& canvas, const TechniqueGene& gene, Rng& rng);

// Registry with the four techniques above, nothing excluded.
TechniqueRegistry default_registry();

// --- expression ---

struct ExpressionReport {
  int genes_expressed = 0;
  std::vector<std::uint64_t> per_gene_ns;
  bool truncated = false;
};

struct Expressed {
  Canvas canvas;
  ExpressionReport report;
};

// Renders the genome gene by gene onto a fresh canvas. The first gene always
// runs; before each later gene, expression stops if elapsed >= budget — a
// gene that starts always completes. The render RNG is derived from the
// genome text hash and `run_seed` only, so output is independent of any
// evolution-loop RNG state. Canvas background comes from the first gene's
// palette when it has one, else black.
Expressed express(const Genome& genome, const TechniqueRegistry& registry,
                  int width, int height, std::uint64_t budget_ns,
                  std::uint64_t run_seed,
                  const Clock& clock = SteadyClock::instance());

// --- timing ---

struct TechniqueTiming {
  std::string technique;
  int invocations = 0;
  double total_ms = 0.0;
  double mean_ms = 0.0;
};

// Wall-times `invocations` randomly-parameterized invocations of each
// technique on fresh canvases. Parameter sequences depend only on `seed`.
// Exclusions are lifted by default so removed techniques can still be timed.
std::vector<TechniqueTiming> time_techniques(const TechniqueRegistry& registry,
                                             int invocations, int canvas_size,
                                             std::uint64_t seed,
                                             bool include_excluded = true);

// CSV with header `technique,invocations,total_ms,mean_ms`.
void write_timing_csv(const std::filesystem::path& path,
                      const std::vector<TechniqueTiming>& rows);

}  // namespace genart
