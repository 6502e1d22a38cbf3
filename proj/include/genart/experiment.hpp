#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "genart/evolve.hpp"

namespace genart {

// The leave-x-out plan: which objective masks to run, how many seeded
// replicates per mask, and the evolution parameters they share.
struct ExperimentPlan {
  std::vector<ObjectiveMask> masks;  // default: enumerate_masks()
  int replicates = 15;
  EvolutionConfig base;
  std::uint64_t base_seed = 1;
};

// All non-empty objective subsets in ascending truth-table order (bit i =
// objective i; pc is bit 0, ac is bit 5).
std::vector<ObjectiveMask> enumerate_masks(int objective_count = kObjectiveCount);

// Deterministic, collision-free cell seed.
std::uint64_t cell_seed(std::uint64_t base_seed, int mask_index, int replicate);

struct ExperimentResults {
  std::filesystem::path root;
  int completed = 0;
  int skipped = 0;  // cells whose manifest already existed
  int failed = 0;
};

// Runs every (mask, replicate) cell into `<root>/ec<NN>/rep<RR>/`. Completed
// cells are detected via their manifest and skipped, so interrupted sweeps
// resume. Per-cell failures land in `<root>/failures.log` and the harness
// moves on.
ExperimentResults run_experiment(const ExperimentPlan& plan,
                                 const TechniqueRegistry& registry,
                                 const CentroidModel& model,
                                 const std::filesystem::path& root);

// One parsed row of fitness.csv.
struct FitnessCsvRow {
  int generation = 0;
  int individual = 0;
  FitnessVector fitness;
  int genes_expressed = 0;
  bool truncated = false;
  std::string genome_text;  // ';' between genes
};

std::vector<FitnessCsvRow> read_fitness_csv(const std::filesystem::path& path);

struct HeatmapTable {
  std::vector<int> mask_indices;                 // ascending truth-table numbers
  std::vector<std::array<double, 6>> raw_means;  // per mask, objective order
  std::vector<std::array<double, 6>> values;     // normalized, 1.0 most fit
};

// Final-population means per (mask, objective) across replicates, oriented so
// higher is fitter, then min-max normalized per objective across masks. A
// degenerate row (all masks equal) maps to all ones.
HeatmapTable aggregate_results(const std::filesystem::path& root);

// CSV with header `config,pc,gc,ut,cd,ns,ac`.
void write_heatmap_csv(const std::filesystem::path& path, const HeatmapTable& table);

struct SweepRow {
  int generation = 0;
  std::string technique;
  double gene_fraction = 0.0;   // of all genes this generation
  double modal_fraction = 0.0;  // individuals whose modal technique this is
  double dominance = 0.0;       // max modal fraction this generation
};

// Per-generation technique distribution for one run directory, computed from
// the genomes logged in fitness.csv. Modal ties break toward the
// lexicographically smallest name.
std::vector<SweepRow> sweep_statistics(const std::filesystem::path& run_dir);

// CSV with header `generation,technique,gene_fraction,modal_fraction,dominance`.
void write_sweeps_csv(const std::filesystem::path& path,
                      const std::vector<SweepRow>& rows);

}  // namespace genart
