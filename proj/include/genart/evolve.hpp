#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "genart/config.hpp"
#include "genart/fitness.hpp"
#include "genart/lexicase.hpp"

namespace genart {

struct EvolutionConfig {
  int population_size = 100;
  int generations = 100;
  double crossover_rate = 0.5;
  double mutation_rate = 0.4;
  double epsilon = 0.85;
  std::uint64_t eval_budget_ms = 180'000;  // per-individual expression budget
  int canvas_width = 500;
  int canvas_height = 500;
  std::uint64_t seed = 1;
  ObjectiveMask mask = ObjectiveMask::all();
  int min_genome_len = 1;
  int max_genome_len = 5;
  int ns_tolerance = 8;
  int jobs = 1;
  std::vector<std::string> excluded;  // techniques removed from sampling
  std::string model_file;             // centroid model path, required by the CLI

  void validate() const;  // throws ConfigError

  static EvolutionConfig from_file(const KeyValueFile& kv);
};

// Produces population_size children: two parents per child via independent
// lexicase draws, crossover honoring crossover_rate, then mutation honoring
// mutation_rate. Full generational replacement, no elitism.
std::vector<Genome> next_generation(const std::vector<EvaluatedIndividual>& evaluated,
                                    const EvolutionConfig& config,
                                    const TechniqueRegistry& registry, Rng& rng);

struct RunResult {
  std::filesystem::path dir;
  int generations = 0;
  std::vector<EvaluatedIndividual> final_population;
};

// Full evolutionary run. Writes into out_dir:
//   fitness.csv           generation,individual,pc,gc,ut,cd,ns,ac,
//                         genes_expressed,truncated,genome
//                         (genome last; its genes are joined with ';')
//   technique_census.csv  generation,technique,gene_count,individuals_using
//   gen<G>_ind<NNN>.png   final-population renders
//   run_manifest          full config + seed; written last, so its presence
//                         marks a completed run
// Reproducible: equal config and seed give byte-identical outputs.
RunResult run_evolution(const EvolutionConfig& config,
                        const TechniqueRegistry& registry,
                        const CentroidModel& model,
                        const std::filesystem::path& out_dir,
                        const Clock* clock = nullptr);

// True when out_dir holds a completed run (its manifest exists).
bool run_complete(const std::filesystem::path& out_dir);

// The manifest body for a config (also what run_evolution writes).
std::string manifest_text(const EvolutionConfig& config);

}  // namespace genart
