#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "genart/canvas.hpp"
#include "genart/classifier.hpp"
#include "genart/genome.hpp"
#include "genart/techniques.hpp"

namespace genart {

// The six objectives, in truth-table bit order.
enum class Objective : int { pc = 0, gc = 1, ut = 2, cd = 3, ns = 4, ac = 5 };

inline constexpr int kObjectiveCount = 6;
inline constexpr std::array<Objective, kObjectiveCount> kAllObjectives = {
    Objective::pc, Objective::gc, Objective::ut,
    Objective::cd, Objective::ns, Objective::ac};

// pc, ut, cd are maximized; gc, ns, ac are minimized.
bool is_maximize(Objective o);
const char* objective_name(Objective o);
std::optional<Objective> objective_from_name(std::string_view name);

struct FitnessVector {
  std::array<double, kObjectiveCount> values{};

  double& operator[](Objective o) { return values[static_cast<int>(o)]; }
  double operator[](Objective o) const { return values[static_cast<int>(o)]; }

  friend bool operator==(const FitnessVector&, const FitnessVector&) = default;
};

// --- pixel metrics (integer accumulation, so results are exact and
// independent of summation order) ---

double rms_difference(const Canvas& a, const Canvas& b);
double chebyshev_difference(const Canvas& a, const Canvas& b);

// --- the objectives ---

// Mean RMS pixel difference against every other image. 0.0 for a population
// of one (no peers).
double ff_pc(std::size_t index, std::span<const Canvas> images);

// Duplicate gene count.
double ff_gc(const Genome& genome);

// Distinct techniques used / non-excluded techniques in the registry,
// clamped to 1 (a genome may legally carry an excluded technique).
double ff_ut(const Genome& genome, const TechniqueRegistry& registry);

// Mean Chebyshev difference against every other image; 0.0 with no peers.
double ff_cd(std::size_t index, std::span<const Canvas> images);

// |near-background fraction - 0.70|; 0 means the 70% negative-space target
// is hit exactly.
double ff_ns(const Canvas& canvas, Rgb background, int tolerance = 8);

// Centroid score shared with the classifier; lower is closer to "art".
double ff_ac(const Canvas& canvas, const CentroidModel& model);

// --- population evaluation ---

struct EvaluationOptions {
  std::uint64_t budget_ns = 180'000'000'000ULL;  // 180 s
  int canvas_width = 500;
  int canvas_height = 500;
  std::uint64_t seed = 1;
  int jobs = 1;  // <= 1 means sequential
  int ns_tolerance = 8;
  const Clock* clock = nullptr;  // null -> steady clock
};

struct EvaluatedIndividual {
  Genome genome;
  Canvas canvas;
  FitnessVector fitness;
  ExpressionReport report;
  bool failed = false;
};

// Expresses every genome, then computes all six objectives regardless of
// which are active in selection. Expression runs in parallel when
// jobs > 1; results are identical to the sequential order. An individual
// whose expression fails keeps a fresh canvas and receives worst-possible
// values on every objective.
std::vector<EvaluatedIndividual> evaluate_population(
    std::span<const Genome> genomes, const TechniqueRegistry& registry,
    const CentroidModel& model, const EvaluationOptions& options);

}  // namespace genart
