#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "genart/classifier.hpp"
#include "genart/error.hpp"
#include "genart/evolve.hpp"
#include "genart/experiment.hpp"
#include "genart/report.hpp"

namespace {

using namespace genart;

struct Size {
  int w = 0;
  int h = 0;
};

Size parse_size(const std::string& text) {
  Size s;
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) {
      s.w = s.h = std::stoi(text);
    } else {
      s.w = std::stoi(text.substr(0, x));
      s.h = std::stoi(text.substr(x + 1));
    }
  } catch (const std::exception&) {
    throw ConfigError("bad size '" + text + "', expected WxH or a single integer");
  }
  if (s.w < 1 || s.h < 1) throw ConfigError("size must be positive");
  return s;
}

// `all`, or ';'-separated groups; each group is comma-separated objective
// names ("ut,ac") or a truth-table number ("63").
std::vector<ObjectiveMask> parse_masks(const std::string& text) {
  if (text == "all") return enumerate_masks();
  std::vector<ObjectiveMask> masks;
  std::istringstream ss(text);
  std::string group;
  while (std::getline(ss, group, ';')) {
    if (group.empty()) continue;
    if (group.find_first_not_of("0123456789") == std::string::npos)
      masks.push_back(ObjectiveMask::from_index(std::stoi(group)));
    else
      masks.push_back(ObjectiveMask::from_names(group));
  }
  if (masks.empty()) throw ConfigError("no masks given");
  return masks;
}

CentroidModel load_model_or_fail(const std::string& path, const char* why) {
  if (path.empty())
    throw ConfigError(std::string("a centroid model is required ") + why +
                      " (config key 'model' or --model)");
  return CentroidModel::load(path);
}

std::string read_genome_text(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(arg);
  if (!in) throw IoError("cannot read genome file: " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_expression_report(const ExpressionReport& report, std::size_t genome_len) {
  std::printf("genes expressed: %d/%zu%s\n", report.genes_expressed, genome_len,
              report.truncated ? " (truncated)" : "");
  for (std::size_t i = 0; i < report.per_gene_ns.size(); ++i)
    std::printf("  gene %zu: %.3f ms\n", i + 1,
                static_cast<double>(report.per_gene_ns[i]) / 1e6);
}

int run(int argc, char** argv) {
  CLI::App app{"Evolves generative-art drawing programs and runs fitness-"
               "ablation experiments"};
  app.require_subcommand(1);

  // --- evolve ---
  auto* evolve_cmd = app.add_subcommand("evolve", "Run one evolutionary run");
  std::string evolve_config, evolve_out, evolve_model;
  int evolve_jobs = 0;
  evolve_cmd->add_option("--config", evolve_config, "Run config file")->required();
  evolve_cmd->add_option("--out", evolve_out, "Output directory")->required();
  evolve_cmd->add_option("--model", evolve_model, "Centroid model (overrides config)");
  evolve_cmd->add_option("--jobs", evolve_jobs, "Evaluation threads");

  // --- experiment ---
  auto* exp_cmd = app.add_subcommand("experiment", "Leave-x-out ablation sweep");
  std::string exp_config, exp_masks = "all", exp_out, exp_model;
  int exp_replicates = 15;
  bool exp_resume = false;
  exp_cmd->add_option("--config", exp_config, "Base run config file")->required();
  exp_cmd->add_option("--masks", exp_masks,
                      "'all' or ';'-separated masks (names or truth-table numbers)");
  exp_cmd->add_option("--replicates", exp_replicates, "Replicates per mask");
  exp_cmd->add_option("--out", exp_out, "Results root")->required();
  exp_cmd->add_option("--model", exp_model, "Centroid model (overrides config)");
  exp_cmd->add_flag("--resume", exp_resume,
                    "Accepted for compatibility; completed cells are always skipped");

  // --- aggregate ---
  auto* agg_cmd = app.add_subcommand("aggregate", "Heatmap CSV from a results tree");
  std::string agg_results, agg_out = "heatmap.csv";
  agg_cmd->add_option("--results", agg_results, "Experiment results root")->required();
  agg_cmd->add_option("--out", agg_out, "Output CSV");

  // --- sweeps ---
  auto* sweeps_cmd = app.add_subcommand("sweeps", "Technique sweep statistics for a run");
  std::string sweeps_run, sweeps_out;
  sweeps_cmd->add_option("--run", sweeps_run, "Run directory")->required();
  sweeps_cmd->add_option("--out", sweeps_out, "Output CSV (default <run>/sweeps.csv)");

  // --- timing ---
  auto* timing_cmd = app.add_subcommand("timing", "Wall-time each technique");
  int timing_invocations = 100, timing_size = 500;
  std::uint64_t timing_seed = 1;
  std::string timing_out = "timing.csv";
  bool timing_respect_exclusions = false;
  timing_cmd->add_option("--invocations", timing_invocations, "Invocations per technique");
  timing_cmd->add_option("--size", timing_size, "Square canvas size");
  timing_cmd->add_option("--seed", timing_seed, "Parameter seed");
  timing_cmd->add_option("--out", timing_out, "Output CSV");
  timing_cmd->add_flag("--respect-exclusions", timing_respect_exclusions,
                       "Skip excluded techniques instead of timing them");

  // --- classifier ---
  auto* cls_cmd = app.add_subcommand("classifier", "Centroid model operations");
  cls_cmd->require_subcommand(1);

  auto* train_cmd = cls_cmd->add_subcommand("train", "Train from two image directories");
  std::string train_art, train_notart, train_out;
  train_cmd->add_option("--art", train_art, "Directory of 'art' images")->required();
  train_cmd->add_option("--not-art", train_notart, "Directory of 'not art' images")->required();
  train_cmd->add_option("--out", train_out, "Model file to write")->required();

  auto* score_cmd = cls_cmd->add_subcommand("score", "Score images");
  std::string score_model;
  std::vector<std::string> score_images;
  score_cmd->add_option("--model", score_model, "Model file")->required();
  score_cmd->add_option("images", score_images, "Images to score")->required();

  auto* batch_cmd = cls_cmd->add_subcommand("batch", "Classify a directory");
  std::string batch_model, batch_dir, batch_out;
  batch_cmd->add_option("--model", batch_model, "Model file")->required();
  batch_cmd->add_option("--dir", batch_dir, "Image directory")->required();
  batch_cmd->add_option("--out", batch_out, "Report CSV (default <dir>/classification.csv)");

  auto* noise_cmd = cls_cmd->add_subcommand("gen-noise", "Generate a noise corpus");
  int noise_count = 0;
  std::string noise_size = "128x128", noise_out;
  std::uint64_t noise_seed = 1;
  noise_cmd->add_option("--count", noise_count, "Number of images")->required();
  noise_cmd->add_option("--size", noise_size, "Image size WxH");
  noise_cmd->add_option("--seed", noise_seed, "Seed");
  noise_cmd->add_option("--out", noise_out, "Output directory")->required();

  // --- render ---
  auto* render_cmd = app.add_subcommand("render", "Express a genome to a PNG");
  std::string render_genome_arg, render_size = "500x500", render_out;
  std::uint64_t render_seed = 1, render_budget_ms = 180'000;
  render_cmd->add_option("--genome", render_genome_arg, "Genome file or - for stdin")->required();
  render_cmd->add_option("--size", render_size, "Canvas size WxH");
  render_cmd->add_option("--seed", render_seed, "Render seed");
  render_cmd->add_option("--budget-ms", render_budget_ms, "Expression budget");
  render_cmd->add_option("--out", render_out, "Output PNG")->required();

  // --- collage ---
  auto* collage_cmd = app.add_subcommand("collage", "Tile a directory of images");
  std::string collage_dir, collage_cell = "64x64", collage_out;
  int collage_columns = 10;
  collage_cmd->add_option("--dir", collage_dir, "Image directory")->required();
  collage_cmd->add_option("--columns", collage_columns, "Grid columns");
  collage_cmd->add_option("--cell-size", collage_cell, "Cell size WxH");
  collage_cmd->add_option("--out", collage_out, "Output PNG")->required();

  CLI11_PARSE(app, argc, argv);

  const TechniqueRegistry registry = default_registry();

  if (*evolve_cmd) {
    EvolutionConfig config = EvolutionConfig::from_file(KeyValueFile::parse_file(evolve_config));
    if (!evolve_model.empty()) config.model_file = evolve_model;
    if (evolve_jobs > 0) config.jobs = evolve_jobs;
    const CentroidModel model = load_model_or_fail(config.model_file, "to run evolution");
    const RunResult result = run_evolution(config, registry, model, evolve_out);
    std::printf("run complete: %d generation(s) logged to %s\n", result.generations + 1,
                result.dir.string().c_str());
  } else if (*exp_cmd) {
    ExperimentPlan plan;
    plan.base = EvolutionConfig::from_file(KeyValueFile::parse_file(exp_config));
    if (!exp_model.empty()) plan.base.model_file = exp_model;
    plan.masks = parse_masks(exp_masks);
    plan.replicates = exp_replicates;
    plan.base_seed = plan.base.seed;
    const CentroidModel model =
        load_model_or_fail(plan.base.model_file, "to run experiments");
    const ExperimentResults results = run_experiment(plan, registry, model, exp_out);
    std::printf("cells completed: %d, skipped: %d, failed: %d\n", results.completed,
                results.skipped, results.failed);
    if (results.failed > 0) return 2;
  } else if (*agg_cmd) {
    const HeatmapTable table = aggregate_results(agg_results);
    write_heatmap_csv(agg_out, table);
    std::printf("wrote %s (%zu configuration(s))\n", agg_out.c_str(),
                table.mask_indices.size());
  } else if (*sweeps_cmd) {
    const auto rows = sweep_statistics(sweeps_run);
    const std::string out =
        sweeps_out.empty() ? (std::filesystem::path(sweeps_run) / "sweeps.csv").string()
                           : sweeps_out;
    write_sweeps_csv(out, rows);
    std::printf("wrote %s (%zu row(s))\n", out.c_str(), rows.size());
  } else if (*timing_cmd) {
    const auto rows = time_techniques(registry, timing_invocations, timing_size,
                                      timing_seed, !timing_respect_exclusions);
    write_timing_csv(timing_out, rows);
    for (const auto& r : rows)
      std::printf("%-16s total %10.2f ms   mean %8.3f ms\n", r.technique.c_str(),
                  r.total_ms, r.mean_ms);
  } else if (*train_cmd) {
    const CentroidModel model = train_centroid_model(train_art, train_notart);
    model.save(train_out);
    std::printf("wrote %s (extractor %s, dimension %d)\n", train_out.c_str(),
                model.extractor_id.c_str(), model.dimension);
  } else if (*score_cmd) {
    const CentroidModel model = CentroidModel::load(score_model);
    for (const auto& path : score_images) {
      const Canvas canvas = read_png(path);
      const double score = model_score(canvas, model);
      std::printf("%s,%.6f,%s\n", path.c_str(), score,
                  art_label_name(score < 0.5 ? ArtLabel::Art : ArtLabel::NotArt));
    }
  } else if (*batch_cmd) {
    const CentroidModel model = CentroidModel::load(batch_model);
    const BatchReport report = classify_batch(batch_dir, model);
    const std::string out =
        batch_out.empty() ? (std::filesystem::path(batch_dir) / "classification.csv").string()
                          : batch_out;
    report.write_csv(out);
    for (const auto& f : report.failures)
      std::fprintf(stderr, "undecodable: %s\n", f.c_str());
    std::printf("art: %d, not-art: %d (report: %s)\n", report.art_count,
                report.notart_count, out.c_str());
  } else if (*noise_cmd) {
    const Size size = parse_size(noise_size);
    generate_noise_corpus(noise_count, size.w, size.h, noise_seed, noise_out);
    std::printf("wrote %d noise image(s) to %s\n", noise_count, noise_out.c_str());
  } else if (*render_cmd) {
    const Size size = parse_size(render_size);
    const std::string text = read_genome_text(render_genome_arg);
    const Genome genome = parse_genome(text, registry);
    const ExpressionReport report = render_genome(
        text, registry, size.w, size.h, render_seed, render_budget_ms, render_out);
    print_expression_report(report, genome.size());
  } else if (*collage_cmd) {
    const Size cell = parse_size(collage_cell);
    collage(collage_dir, collage_columns, cell.w, cell.h, collage_out);
    std::printf("wrote %s\n", collage_out.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
