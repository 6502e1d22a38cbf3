#include "genart/evolve.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "genart/error.hpp"
#include "genart/image_io.hpp"

namespace genart {

void EvolutionConfig::validate() const {
  if (population_size < 2)
    throw ConfigError("population_size must be >= 2 (pairwise metrics need peers)");
  if (generations < 0) throw ConfigError("generations must be >= 0");
  if (crossover_rate < 0.0 || crossover_rate > 1.0)
    throw ConfigError("crossover_rate must be in [0, 1]");
  if (mutation_rate < 0.0 || mutation_rate > 1.0)
    throw ConfigError("mutation_rate must be in [0, 1]");
  if (epsilon < 0.0 || epsilon > 1.0) throw ConfigError("epsilon must be in [0, 1]");
  if (eval_budget_ms == 0) throw ConfigError("eval_budget_ms must be > 0");
  if (canvas_width < 8 || canvas_height < 8)
    throw ConfigError("canvas must be at least 8x8");
  if (mask.empty()) throw ConfigError("objective mask must be non-empty");
  if (min_genome_len < 1 || min_genome_len > max_genome_len)
    throw ConfigError("genome length bounds require 1 <= min <= max");
  if (ns_tolerance < 0) throw ConfigError("ns_tolerance must be >= 0");
}

EvolutionConfig EvolutionConfig::from_file(const KeyValueFile& kv) {
  EvolutionConfig c;
  c.population_size = static_cast<int>(kv.get_int("population_size", c.population_size));
  c.generations = static_cast<int>(kv.get_int("generations", c.generations));
  c.crossover_rate = kv.get_real("crossover_rate", c.crossover_rate);
  c.mutation_rate = kv.get_real("mutation_rate", c.mutation_rate);
  c.epsilon = kv.get_real("epsilon", c.epsilon);
  c.eval_budget_ms =
      static_cast<std::uint64_t>(kv.get_int("eval_budget_ms", static_cast<std::int64_t>(c.eval_budget_ms)));
  c.canvas_width = static_cast<int>(kv.get_int("canvas_width", c.canvas_width));
  c.canvas_height = static_cast<int>(kv.get_int("canvas_height", c.canvas_height));
  c.seed = static_cast<std::uint64_t>(kv.get_int("seed", static_cast<std::int64_t>(c.seed)));
  if (const auto m = kv.get("mask")) c.mask = ObjectiveMask::from_names(*m);
  c.min_genome_len = static_cast<int>(kv.get_int("min_genome_len", c.min_genome_len));
  c.max_genome_len = static_cast<int>(kv.get_int("max_genome_len", c.max_genome_len));
  c.ns_tolerance = static_cast<int>(kv.get_int("ns_tolerance", c.ns_tolerance));
  c.jobs = static_cast<int>(kv.get_int("jobs", c.jobs));
  if (const auto ex = kv.get("exclude")) {
    std::istringstream ss(*ex);
    std::string name;
    while (std::getline(ss, name, ',')) {
      const auto b = name.find_first_not_of(" \t");
      const auto e = name.find_last_not_of(" \t");
      if (b != std::string::npos) c.excluded.push_back(name.substr(b, e - b + 1));
    }
  }
  c.model_file = kv.get_string("model", c.model_file);
  c.validate();
  return c;
}

std::vector<Genome> next_generation(const std::vector<EvaluatedIndividual>& evaluated,
                                    const EvolutionConfig& config,
                                    const TechniqueRegistry& registry, Rng& rng) {
  std::vector<FitnessVector> fitness;
  fitness.reserve(evaluated.size());
  for (const auto& ind : evaluated) fitness.push_back(ind.fitness);

  std::vector<Genome> children;
  children.reserve(evaluated.size());
  for (std::size_t i = 0; i < evaluated.size(); ++i) {
    const std::size_t a = lexicase_select(fitness, config.mask, config.epsilon, rng);
    const std::size_t b = lexicase_select(fitness, config.mask, config.epsilon, rng);
    Genome child = crossover(evaluated[a].genome, evaluated[b].genome, rng,
                             config.crossover_rate);
    children.push_back(
        mutate(child, registry, rng, config.mutation_rate));
  }
  return children;
}

namespace {

// The genome column embeds the serialized genome with ';' joining genes so
// one individual stays on one CSV line. It is the last column; readers take
// everything after the tenth comma.
std::string csv_genome(const Genome& genome) {
  std::string s = serialize(genome);
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

void write_fitness_rows(std::ofstream& out, int generation,
                        const std::vector<EvaluatedIndividual>& evaluated) {
  char buf[256];
  for (std::size_t i = 0; i < evaluated.size(); ++i) {
    const auto& ind = evaluated[i];
    const auto& f = ind.fitness;
    std::snprintf(buf, sizeof buf,
                  "%d,%zu,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d,%d,", generation,
                  i, f[Objective::pc], f[Objective::gc], f[Objective::ut],
                  f[Objective::cd], f[Objective::ns], f[Objective::ac],
                  ind.report.genes_expressed, ind.report.truncated ? 1 : 0);
    out << buf << csv_genome(ind.genome) << '\n';
  }
}

void write_census_rows(std::ofstream& out, int generation,
                       const std::vector<EvaluatedIndividual>& evaluated) {
  std::map<std::string, std::pair<int, int>> census;  // name -> (genes, individuals)
  for (const auto& ind : evaluated) {
    std::map<std::string, int> per_individual;
    for (const auto& gene : ind.genome.genes) ++per_individual[gene.technique];
    for (const auto& [name, count] : per_individual) {
      census[name].first += count;
      census[name].second += 1;
    }
  }
  for (const auto& [name, counts] : census)
    out << generation << ',' << name << ',' << counts.first << ',' << counts.second
        << '\n';
}

}  // namespace

std::string manifest_text(const EvolutionConfig& config) {
  std::ostringstream out;
  char buf[64];
  auto real = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out << "canvas_height = " << config.canvas_height << '\n'
      << "canvas_width = " << config.canvas_width << '\n'
      << "crossover_rate = " << real(config.crossover_rate) << '\n'
      << "epsilon = " << real(config.epsilon) << '\n'
      << "eval_budget_ms = " << config.eval_budget_ms << '\n';
  std::string excluded;
  for (const auto& name : config.excluded) {
    if (!excluded.empty()) excluded += ',';
    excluded += name;
  }
  out << "exclude = " << excluded << '\n'
      << "generations = " << config.generations << '\n'
      << "mask = " << config.mask.to_names() << '\n'
      << "mask_index = " << config.mask.index() << '\n'
      << "max_genome_len = " << config.max_genome_len << '\n'
      << "min_genome_len = " << config.min_genome_len << '\n'
      << "model = " << config.model_file << '\n'
      << "mutation_rate = " << real(config.mutation_rate) << '\n'
      << "ns_tolerance = " << config.ns_tolerance << '\n'
      << "population_size = " << config.population_size << '\n'
      << "seed = " << config.seed << '\n';
  return out.str();
}

bool run_complete(const std::filesystem::path& out_dir) {
  return std::filesystem::exists(out_dir / "run_manifest");
}

RunResult run_evolution(const EvolutionConfig& config,
                        const TechniqueRegistry& registry,
                        const CentroidModel& model,
                        const std::filesystem::path& out_dir, const Clock* clock) {
  config.validate();
  if (!model.trained()) throw ConfigError("run_evolution requires a trained model");

  TechniqueRegistry reg = registry;
  for (const auto& name : config.excluded) reg.set_excluded(name, true);
  if (reg.non_excluded_count() == 0)
    throw ConfigError("all techniques are excluded");

  std::filesystem::create_directories(out_dir);
  std::ofstream fitness_csv(out_dir / "fitness.csv");
  std::ofstream census_csv(out_dir / "technique_census.csv");
  if (!fitness_csv || !census_csv)
    throw IoError("cannot create run logs in " + out_dir.string());
  fitness_csv << "generation,individual,pc,gc,ut,cd,ns,ac,genes_expressed,"
                 "truncated,genome\n";
  census_csv << "generation,technique,gene_count,individuals_using\n";

  EvaluationOptions opts;
  opts.budget_ns = config.eval_budget_ms * 1'000'000ULL;
  opts.canvas_width = config.canvas_width;
  opts.canvas_height = config.canvas_height;
  opts.seed = config.seed;
  opts.jobs = config.jobs;
  opts.ns_tolerance = config.ns_tolerance;
  opts.clock = clock;

  Rng rng(mix_seed(0x65766f6cULL, config.seed));  // evolution stream

  std::vector<Genome> population;
  population.reserve(static_cast<std::size_t>(config.population_size));
  for (int i = 0; i < config.population_size; ++i)
    population.push_back(
        random_genome(reg, rng, config.min_genome_len, config.max_genome_len));

  std::vector<EvaluatedIndividual> evaluated;
  for (int gen = 0; gen <= config.generations; ++gen) {
    evaluated = evaluate_population(population, reg, model, opts);
    write_fitness_rows(fitness_csv, gen, evaluated);
    write_census_rows(census_csv, gen, evaluated);
    if (gen < config.generations)
      population = next_generation(evaluated, config, reg, rng);
  }

  char name[48];
  for (std::size_t i = 0; i < evaluated.size(); ++i) {
    std::snprintf(name, sizeof name, "gen%d_ind%03zu.png", config.generations, i);
    write_png(out_dir / name, evaluated[i].canvas);
  }

  fitness_csv.close();
  census_csv.close();

  // Manifest last: its presence marks completion for the resume logic.
  {
    const auto tmp = out_dir / "run_manifest.tmp";
    std::ofstream manifest(tmp);
    if (!manifest) throw IoError("cannot write manifest in " + out_dir.string());
    manifest << manifest_text(config);
    manifest.close();
    std::filesystem::rename(tmp, out_dir / "run_manifest");
  }

  return {out_dir, config.generations, std::move(evaluated)};
}

}  // namespace genart
