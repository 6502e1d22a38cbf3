#include "genart/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>

#include "genart/error.hpp"

namespace genart {

std::vector<ObjectiveMask> enumerate_masks(int objective_count) {
  if (objective_count < 1 || objective_count > kObjectiveCount)
    throw ConfigError("objective_count must be in [1, 6]");
  std::vector<ObjectiveMask> out;
  const int limit = 1 << objective_count;
  for (int bits = 1; bits < limit; ++bits)
    out.push_back(ObjectiveMask{static_cast<std::uint8_t>(bits)});
  return out;
}

std::uint64_t cell_seed(std::uint64_t base_seed, int mask_index, int replicate) {
  return base_seed * 1'000'000ULL + static_cast<std::uint64_t>(mask_index) * 1'000ULL +
         static_cast<std::uint64_t>(replicate);
}

ExperimentResults run_experiment(const ExperimentPlan& plan,
                                 const TechniqueRegistry& registry,
                                 const CentroidModel& model,
                                 const std::filesystem::path& root) {
  if (plan.masks.empty()) throw ConfigError("experiment plan has no masks");
  if (plan.replicates < 1) throw ConfigError("experiment needs >= 1 replicate");
  for (const auto& m : plan.masks)
    if (m.empty()) throw ConfigError("experiment plan contains an empty mask");

  std::filesystem::create_directories(root);
  ExperimentResults results{root, 0, 0, 0};

  for (const ObjectiveMask& mask : plan.masks) {
    for (int rep = 0; rep < plan.replicates; ++rep) {
      char cell[32];
      std::snprintf(cell, sizeof cell, "ec%02d/rep%02d", mask.index(), rep);
      const std::filesystem::path dir = root / cell;
      if (run_complete(dir)) {
        ++results.skipped;
        continue;
      }
      EvolutionConfig config = plan.base;
      config.mask = mask;
      config.seed = cell_seed(plan.base_seed, mask.index(), rep);
      try {
        run_evolution(config, registry, model, dir);
        ++results.completed;
      } catch (const Error& e) {
        ++results.failed;
        std::ofstream log(root / "failures.log", std::ios::app);
        log << cell << ": " << e.what() << '\n';
      }
    }
  }
  return results;
}

std::vector<FitnessCsvRow> read_fitness_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());

  std::vector<FitnessCsvRow> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // The genome column is everything after the tenth comma.
    std::array<double, 10> nums{};
    std::size_t start = 0;
    for (int field = 0; field < 10; ++field) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos)
        throw IoError("malformed fitness row in " + path.string());
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + comma, v);
      if (ec != std::errc{})
        throw IoError("malformed number in " + path.string());
      nums[field] = v;
      start = comma + 1;
    }
    FitnessCsvRow row;
    row.generation = static_cast<int>(nums[0]);
    row.individual = static_cast<int>(nums[1]);
    for (int i = 0; i < kObjectiveCount; ++i) row.fitness.values[i] = nums[2 + i];
    row.genes_expressed = static_cast<int>(nums[8]);
    row.truncated = nums[9] != 0.0;
    row.genome_text = line.substr(start);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// ec<NN> directories under root, ascending.
std::vector<std::pair<int, std::filesystem::path>> mask_dirs(
    const std::filesystem::path& root) {
  std::vector<std::pair<int, std::filesystem::path>> out;
  if (!std::filesystem::is_directory(root))
    throw IoError("not a directory: " + root.string());
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    const std::string name = entry.path().filename().string();
    if (name.size() < 3 || name.compare(0, 2, "ec") != 0) continue;
    int idx = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 2, name.data() + name.size(), idx);
    if (ec != std::errc{} || ptr != name.data() + name.size()) continue;
    out.emplace_back(idx, entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

HeatmapTable aggregate_results(const std::filesystem::path& root) {
  HeatmapTable table;

  for (const auto& [mask_index, dir] : mask_dirs(root)) {
    std::array<double, 6> sum{};
    std::int64_t count = 0;
    std::vector<std::filesystem::path> reps;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_directory() && run_complete(entry.path()))
        reps.push_back(entry.path());
    std::sort(reps.begin(), reps.end());

    for (const auto& rep : reps) {
      const auto rows = read_fitness_csv(rep / "fitness.csv");
      if (rows.empty()) continue;
      int last_gen = 0;
      for (const auto& r : rows) last_gen = std::max(last_gen, r.generation);
      for (const auto& r : rows) {
        if (r.generation != last_gen) continue;
        for (int i = 0; i < kObjectiveCount; ++i) sum[i] += r.fitness.values[i];
        ++count;
      }
    }
    if (count == 0) continue;
    std::array<double, 6> mean{};
    for (int i = 0; i < kObjectiveCount; ++i)
      mean[i] = sum[i] / static_cast<double>(count);
    table.mask_indices.push_back(mask_index);
    table.raw_means.push_back(mean);
  }

  if (table.mask_indices.empty())
    throw IoError("no completed cells under " + root.string());

  // Orient (negate minimized objectives) and min-max normalize each
  // objective across masks. A zero-range row maps to all ones.
  table.values.resize(table.raw_means.size());
  for (int obj = 0; obj < kObjectiveCount; ++obj) {
    const bool maximize = is_maximize(static_cast<Objective>(obj));
    double lo = 0.0, hi = 0.0;
    for (std::size_t m = 0; m < table.raw_means.size(); ++m) {
      const double v = maximize ? table.raw_means[m][obj] : -table.raw_means[m][obj];
      if (m == 0) lo = hi = v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    for (std::size_t m = 0; m < table.raw_means.size(); ++m) {
      const double v = maximize ? table.raw_means[m][obj] : -table.raw_means[m][obj];
      table.values[m][obj] = (hi == lo) ? 1.0 : (v - lo) / (hi - lo);
    }
  }
  return table;
}

void write_heatmap_csv(const std::filesystem::path& path, const HeatmapTable& table) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "config,pc,gc,ut,cd,ns,ac\n";
  char buf[32];
  for (std::size_t m = 0; m < table.mask_indices.size(); ++m) {
    out << table.mask_indices[m];
    for (int i = 0; i < kObjectiveCount; ++i) {
      std::snprintf(buf, sizeof buf, ",%.6f", table.values[m][i]);
      out << buf;
    }
    out << '\n';
  }
}

std::vector<SweepRow> sweep_statistics(const std::filesystem::path& run_dir) {
  const auto rows = read_fitness_csv(run_dir / "fitness.csv");

  // generation -> technique -> (gene count, modal-individual count)
  std::map<int, std::map<std::string, std::pair<int, int>>> stats;
  std::map<int, int> population;  // generation -> individuals
  std::map<int, int> genes;       // generation -> total genes

  for (const auto& row : rows) {
    auto& gen_stats = stats[row.generation];
    ++population[row.generation];

    std::map<std::string, int> per_individual;
    std::size_t start = 0;
    const std::string& text = row.genome_text;
    while (start <= text.size()) {
      std::size_t end = text.find(';', start);
      if (end == std::string::npos) end = text.size();
      const std::string gene = text.substr(start, end - start);
      const std::size_t colon = gene.find(':');
      const std::string name = colon == std::string::npos ? gene : gene.substr(0, colon);
      if (!name.empty()) ++per_individual[name];
      if (end == text.size()) break;
      start = end + 1;
    }

    std::string modal;
    int modal_count = 0;
    for (const auto& [name, count] : per_individual) {
      gen_stats[name].first += count;
      genes[row.generation] += count;
      if (count > modal_count) {  // std::map order breaks ties toward the
        modal = name;             // lexicographically smallest name
        modal_count = count;
      }
    }
    if (!modal.empty()) ++gen_stats[modal].second;
  }

  std::vector<SweepRow> out;
  for (const auto& [gen, gen_stats] : stats) {
    double dominance = 0.0;
    for (const auto& [name, counts] : gen_stats)
      dominance = std::max(
          dominance, static_cast<double>(counts.second) / population[gen]);
    for (const auto& [name, counts] : gen_stats) {
      SweepRow row;
      row.generation = gen;
      row.technique = name;
      row.gene_fraction = static_cast<double>(counts.first) / genes[gen];
      row.modal_fraction = static_cast<double>(counts.second) / population[gen];
      row.dominance = dominance;
      out.push_back(std::move(row));
    }
  }
  return out;
}

void write_sweeps_csv(const std::filesystem::path& path,
                      const std::vector<SweepRow>& rows) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "generation,technique,gene_fraction,modal_fraction,dominance\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, ",%.6f,%.6f,%.6f", r.gene_fraction,
                  r.modal_fraction, r.dominance);
    out << r.generation << ',' << r.technique << buf << '\n';
  }
}

}  // namespace genart
