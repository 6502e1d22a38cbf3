#include "genart/fitness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <unordered_set>

#include "genart/error.hpp"

namespace genart {

bool is_maximize(Objective o) {
  switch (o) {
    case Objective::pc:
    case Objective::ut:
    case Objective::cd:
      return true;
    case Objective::gc:
    case Objective::ns:
    case Objective::ac:
      return false;
  }
  return false;
}

const char* objective_name(Objective o) {
  switch (o) {
    case Objective::pc: return "pc";
    case Objective::gc: return "gc";
    case Objective::ut: return "ut";
    case Objective::cd: return "cd";
    case Objective::ns: return "ns";
    case Objective::ac: return "ac";
  }
  return "?";
}

std::optional<Objective> objective_from_name(std::string_view name) {
  for (Objective o : kAllObjectives)
    if (name == objective_name(o)) return o;
  return std::nullopt;
}

namespace {

void require_same_dims(const Canvas& a, const Canvas& b) {
  if (a.width() != b.width() || a.height() != b.height())
    throw MetricError("image dimension mismatch");
}

// Runs fn(i) for i in [0, n) across `jobs` threads. Each index writes only
// its own output slot, so scheduling cannot change results.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> threads;
  const std::size_t count = std::min(static_cast<std::size_t>(jobs), n);
  threads.reserve(count);
  for (std::size_t t = 0; t < count; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
}

}  // namespace

double rms_difference(const Canvas& a, const Canvas& b) {
  require_same_dims(a, b);
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  std::uint64_t sum_sq = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const std::int64_t d = std::int64_t(pa[i]) - std::int64_t(pb[i]);
    sum_sq += static_cast<std::uint64_t>(d * d);
  }
  return std::sqrt(static_cast<double>(sum_sq) / static_cast<double>(pa.size()));
}

double chebyshev_difference(const Canvas& a, const Canvas& b) {
  require_same_dims(a, b);
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  int max_d = 0;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    const int d = std::abs(int(pa[i]) - int(pb[i]));
    if (d > max_d) max_d = d;
  }
  return static_cast<double>(max_d);
}

namespace {

double mean_pairwise(std::size_t index, std::span<const Canvas> images,
                     double (*metric)(const Canvas&, const Canvas&)) {
  if (images.size() < 2) return 0.0;  // no peers
  double sum = 0.0;
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (j == index) continue;
    sum += metric(images[index], images[j]);
  }
  return sum / static_cast<double>(images.size() - 1);
}

}  // namespace

double ff_pc(std::size_t index, std::span<const Canvas> images) {
  return mean_pairwise(index, images, &rms_difference);
}

double ff_gc(const Genome& genome) {
  return static_cast<double>(duplicate_gene_count(genome));
}

double ff_ut(const Genome& genome, const TechniqueRegistry& registry) {
  const std::size_t denom = registry.non_excluded_count();
  if (denom == 0) throw ConfigError("registry has no non-excluded techniques");
  std::unordered_set<std::string_view> names;
  for (const auto& gene : genome.genes) names.insert(gene.technique);
  return std::min(1.0, static_cast<double>(names.size()) / static_cast<double>(denom));
}

double ff_cd(std::size_t index, std::span<const Canvas> images) {
  return mean_pairwise(index, images, &chebyshev_difference);
}

double ff_ns(const Canvas& canvas, Rgb background, int tolerance) {
  return std::abs(near_background_fraction(canvas, background, tolerance) - 0.70);
}

double ff_ac(const Canvas& canvas, const CentroidModel& model) {
  return model_score(canvas, model);
}

namespace {

FitnessVector worst_fitness(const Genome& genome) {
  FitnessVector f;
  f[Objective::pc] = 0.0;
  f[Objective::gc] = static_cast<double>(genome.size());  // above any real count
  f[Objective::ut] = 0.0;
  f[Objective::cd] = 0.0;
  f[Objective::ns] = 0.7;
  f[Objective::ac] = 1.0;
  return f;
}

}  // namespace

std::vector<EvaluatedIndividual> evaluate_population(
    std::span<const Genome> genomes, const TechniqueRegistry& registry,
    const CentroidModel& model, const EvaluationOptions& options) {
  if (genomes.empty()) throw ConfigError("cannot evaluate an empty population");
  const Clock& clock =
      options.clock ? *options.clock : static_cast<const Clock&>(SteadyClock::instance());

  const std::size_t n = genomes.size();
  std::vector<EvaluatedIndividual> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back({genomes[i],
                   Canvas(options.canvas_width, options.canvas_height),
                   FitnessVector{},
                   ExpressionReport{},
                   false});

  // Phase 1: expression plus the per-individual objectives.
  parallel_for(n, options.jobs, [&](std::size_t i) {
    EvaluatedIndividual& ind = out[i];
    try {
      Expressed e = express(ind.genome, registry, options.canvas_width,
                            options.canvas_height, options.budget_ns,
                            options.seed, clock);
      ind.canvas = std::move(e.canvas);
      ind.report = std::move(e.report);
      ind.fitness[Objective::gc] = ff_gc(ind.genome);
      ind.fitness[Objective::ut] = ff_ut(ind.genome, registry);
      ind.fitness[Objective::ns] =
          ff_ns(ind.canvas, ind.canvas.background(), options.ns_tolerance);
      ind.fitness[Objective::ac] = ff_ac(ind.canvas, model);
    } catch (const Error&) {
      ind.failed = true;
    }
  });

  // Phase 2: population-relative metrics over the full canvas set. The
  // pairwise metrics are exact integers per pair, so the split into halves
  // (i,j) and the thread schedule cannot change results.
  std::vector<Canvas> canvases;
  canvases.reserve(n);
  for (const auto& ind : out) canvases.push_back(ind.canvas);

  std::vector<double> rms(n * n, 0.0), cheb(n * n, 0.0);
  parallel_for(n, options.jobs, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = rms_difference(canvases[i], canvases[j]);
      const double c = chebyshev_difference(canvases[i], canvases[j]);
      rms[i * n + j] = rms[j * n + i] = r;
      cheb[i * n + j] = cheb[j * n + i] = c;
    }
  });

  for (std::size_t i = 0; i < n; ++i) {
    if (n >= 2) {
      double sum_r = 0.0, sum_c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        sum_r += rms[i * n + j];
        sum_c += cheb[i * n + j];
      }
      out[i].fitness[Objective::pc] = sum_r / static_cast<double>(n - 1);
      out[i].fitness[Objective::cd] = sum_c / static_cast<double>(n - 1);
    }
    if (out[i].failed) out[i].fitness = worst_fitness(out[i].genome);
  }
  return out;
}

}  // namespace genart
