#include "genart/techniques.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "genart/error.hpp"
#include "genart/noise.hpp"

namespace genart {

std::uint64_t SteadyClock::now_ns() const {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

const SteadyClock& SteadyClock::instance() {
  static const SteadyClock clock;
  return clock;
}

namespace {

Rgb pick_color(const Palette& palette, Rng& rng) {
  return palette.colors[rng.index(palette.colors.size())];
}

}  // namespace

// Args: palette, particles, steps, step-size, noise-seed, octaves, falloff, scale
void draw_flow_field(Canvas& canvas, const TechniqueGene& gene, Rng& rng) {
  const Palette& palette = palette_at(gene.int_arg(0));
  const std::int64_t particles = gene.int_arg(1);
  const std::int64_t steps = gene.int_arg(2);
  const double step_size = gene.real_arg(3);
  const NoiseField field(static_cast<std::uint64_t>(gene.int_arg(4)),
                         static_cast<int>(gene.int_arg(5)), gene.real_arg(6),
                         gene.real_arg(7));

  const double w = canvas.width();
  const double h = canvas.height();
  for (std::int64_t p = 0; p < particles; ++p) {
    double x = rng.uniform_real(0.0, w);
    double y = rng.uniform_real(0.0, h);
    const Rgb color = pick_color(palette, rng);
    for (std::int64_t s = 0; s < steps; ++s) {
      canvas.set(static_cast<int>(x), static_cast<int>(y), color);
      const double theta = field.angle(x, y);
      x += step_size * std::cos(theta);
      y += step_size * std::sin(theta);
      if (x < 0 || y < 0 || x >= w || y >= h) break;  // no wraparound
    }
  }
}

// Args: palette, spacing, length, thickness, noise-seed, octaves, falloff, scale
void draw_flow_field_2(Canvas& canvas, const TechniqueGene& gene, Rng& rng) {
  const Palette& palette = palette_at(gene.int_arg(0));
  const std::int64_t spacing = gene.int_arg(1);
  const std::int64_t length = gene.int_arg(2);
  const int thickness = static_cast<int>(gene.int_arg(3));
  const NoiseField field(static_cast<std::uint64_t>(gene.int_arg(4)),
                         static_cast<int>(gene.int_arg(5)), gene.real_arg(6),
                         gene.real_arg(7));

  const double w = canvas.width();
  const double h = canvas.height();
  const double step = 2.0;
  for (std::int64_t gy = spacing / 2; gy < canvas.height(); gy += spacing) {
    for (std::int64_t gx = spacing / 2; gx < canvas.width(); gx += spacing) {
      double x = static_cast<double>(gx);
      double y = static_cast<double>(gy);
      const Rgb color = pick_color(palette, rng);
      for (std::int64_t s = 0; s < length; ++s) {
        canvas.stamp_square(static_cast<int>(x), static_cast<int>(y), thickness,
                            color);
        const double theta = field.angle(x, y);
        x += step * std::cos(theta);
        y += step * std::sin(theta);
        if (x < 0 || y < 0 || x >= w || y >= h) break;
      }
    }
  }
}

// Args: palette, attempts, min-radius, max-radius
void draw_circle_packing(Canvas& canvas, const TechniqueGene& gene, Rng& rng) {
  const Palette& palette = palette_at(gene.int_arg(0));
  const std::int64_t attempts = gene.int_arg(1);
  const double min_r = static_cast<double>(gene.int_arg(2));
  const double max_r = static_cast<double>(gene.int_arg(3));

  struct Circle {
    double x, y, r;
  };
  std::vector<Circle> accepted;

  const double w = canvas.width();
  const double h = canvas.height();
  const double margin = 1.0;  // required separation between circles

  for (std::int64_t attempt = 0; attempt < attempts; ++attempt) {
    const double cx = rng.uniform_real(0.0, w);
    const double cy = rng.uniform_real(0.0, h);

    bool overlaps = false;
    for (const Circle& c : accepted) {
      const double d = std::hypot(cx - c.x, cy - c.y);
      if (d < min_r + c.r + margin) {
        overlaps = true;
        break;
      }
    }
    if (overlaps) continue;

    double r = min_r;
    while (r + 1.0 <= max_r) {
      const double grown = r + 1.0;
      if (cx < grown || cy < grown || cx > w - 1 - grown || cy > h - 1 - grown)
        break;  // would touch the canvas edge
      bool blocked = false;
      for (const Circle& c : accepted) {
        if (std::hypot(cx - c.x, cy - c.y) < grown + c.r + margin) {
          blocked = true;
          break;
        }
      }
      if (blocked) break;
      r = grown;
    }

    accepted.push_back({cx, cy, r});
    canvas.fill_circle(cx, cy, r, pick_color(palette, rng));
  }
}

// Args: palette, curves, amplitude, frequency, phase, offset, thickness
// Amplitude and offset are fractions of the canvas height.
void draw_basic_trig(Canvas& canvas, const TechniqueGene& gene, Rng& rng) {
  const Palette& palette = palette_at(gene.int_arg(0));
  const std::int64_t curves = gene.int_arg(1);
  const double amplitude = gene.real_arg(2) * canvas.height();
  const double frequency = gene.real_arg(3);
  const double phase = gene.real_arg(4);
  const double offset = gene.real_arg(5) * (canvas.height() - 1);
  const int thickness = static_cast<int>(gene.int_arg(6));

  const double two_pi = 2.0 * std::numbers::pi;
  const int w = canvas.width();
  for (std::int64_t c = 0; c < curves; ++c) {
    const double jitter = rng.uniform_real(0.0, two_pi);
    const Rgb color = palette.colors[static_cast<std::size_t>(c) % palette.colors.size()];
    int prev_y = 0;
    for (int x = 0; x < w; ++x) {
      const double t = frequency * (static_cast<double>(x) / w) * two_pi;
      const int y = static_cast<int>(std::lround(offset + amplitude * std::sin(t + phase + jitter)));
      if (x == 0)
        canvas.vertical_span(x, y, y, thickness, color);
      else
        canvas.vertical_span(x, prev_y, y, thickness, color);
      prev_y = y;
    }
  }
}

TechniqueRegistry default_registry() {
  const auto palette_count =
      static_cast<std::int64_t>(builtin_palettes().size());
  TechniqueRegistry reg;

  reg.add({"flow-field",
           {ParamDomain::integer("palette", 0, palette_count - 1),
            ParamDomain::integer("particles", 100, 5000),
            ParamDomain::integer("steps", 10, 1000),
            ParamDomain::real("step-size", 0.5, 3.0),
            ParamDomain::integer("noise-seed", 0, 1000000),
            ParamDomain::integer("octaves", 1, 4),
            ParamDomain::real("falloff", 0.3, 0.7),
            ParamDomain::real("scale", 0.002, 0.02)}},
          draw_flow_field);

  reg.add({"flow-field-2",
           {ParamDomain::integer("palette", 0, palette_count - 1),
            ParamDomain::integer("spacing", 8, 32),
            ParamDomain::integer("length", 10, 100),
            ParamDomain::integer("thickness", 1, 3),
            ParamDomain::integer("noise-seed", 0, 1000000),
            ParamDomain::integer("octaves", 1, 4),
            ParamDomain::real("falloff", 0.3, 0.7),
            ParamDomain::real("scale", 0.002, 0.02)}},
          draw_flow_field_2);

  reg.add({"circle-packing",
           {ParamDomain::integer("palette", 0, palette_count - 1),
            ParamDomain::integer("attempts", 50, 2000),
            ParamDomain::integer("min-radius", 2, 8),
            ParamDomain::integer("max-radius", 10, 60)}},
          draw_circle_packing);

  reg.add({"basic-trig",
           {ParamDomain::integer("palette", 0, palette_count - 1),
            ParamDomain::integer("curves", 1, 10),
            ParamDomain::real("amplitude", 0.0, 0.45),
            ParamDomain::real("frequency", 0.5, 8.0),
            ParamDomain::real("phase", 0.0, 6.283185307179586),
            ParamDomain::real("offset", 0.1, 0.9),
            ParamDomain::integer("thickness", 1, 4)}},
          draw_basic_trig);

  return reg;
}

namespace {

// Background comes from the first gene's palette when that technique has a
// `palette` parameter; otherwise black.
Rgb expression_background(const Genome& genome, const TechniqueRegistry& registry) {
  if (genome.genes.empty()) return {0, 0, 0};
  const TechniqueGene& first = genome.genes.front();
  const TechniqueDescriptor* d = registry.find(first.technique);
  if (!d) return {0, 0, 0};
  for (std::size_t i = 0; i < d->params.size(); ++i) {
    if (d->params[i].name == "palette" &&
        d->params[i].kind == ParamDomain::Kind::IntegerRange)
      return palette_at(first.int_arg(i)).background;
  }
  return {0, 0, 0};
}

}  // namespace

Expressed express(const Genome& genome, const TechniqueRegistry& registry,
                  int width, int height, std::uint64_t budget_ns,
                  std::uint64_t run_seed, const Clock& clock) {
  if (budget_ns == 0) throw ConfigError("expression budget must be > 0");

  Rng rng(mix_seed(fnv1a64(serialize(genome)), run_seed));
  Expressed out{Canvas(width, height, expression_background(genome, registry)),
                ExpressionReport{}};

  const std::uint64_t start = clock.now_ns();
  for (std::size_t i = 0; i < genome.genes.size(); ++i) {
    // The first gene always runs; elapsed time is checked before each later
    // gene, and a gene that begins is never preempted.
    if (i > 0 && clock.now_ns() - start >= budget_ns) {
      out.report.truncated = true;
      break;
    }
    const TechniqueGene& gene = genome.genes[i];
    const DrawFn& draw = registry.draw_fn(gene.technique);  // throws if unknown
    const std::uint64_t gene_start = clock.now_ns();
    draw(out.canvas, gene, rng);
    out.report.per_gene_ns.push_back(clock.now_ns() - gene_start);
    ++out.report.genes_expressed;
  }
  return out;
}

std::vector<TechniqueTiming> time_techniques(const TechniqueRegistry& registry,
                                             int invocations, int canvas_size,
                                             std::uint64_t seed,
                                             bool include_excluded) {
  if (invocations < 1) throw ConfigError("timing requires invocations >= 1");

  std::vector<TechniqueTiming> rows;
  const SteadyClock& clock = SteadyClock::instance();
  std::size_t technique_index = 0;
  for (const auto& d : registry.descriptors()) {
    const std::size_t ti = technique_index++;
    if (d.excluded && !include_excluded) continue;

    TechniqueTiming row;
    row.technique = d.name;
    row.invocations = invocations;
    std::uint64_t total_ns = 0;
    for (int k = 0; k < invocations; ++k) {
      // One stream per (seed, technique, invocation): parameters are
      // reproducible regardless of which techniques are timed.
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(ti),
                       static_cast<std::uint64_t>(k)));
      TechniqueGene gene;
      gene.technique = d.name;
      for (const auto& p : d.params) gene.args.push_back(p.sample(rng));

      Canvas canvas(canvas_size, canvas_size);
      const std::uint64_t t0 = clock.now_ns();
      registry.draw_fn(d.name)(canvas, gene, rng);
      total_ns += clock.now_ns() - t0;
    }
    row.total_ms = static_cast<double>(total_ns) / 1e6;
    row.mean_ms = row.total_ms / invocations;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_timing_csv(const std::filesystem::path& path,
                      const std::vector<TechniqueTiming>& rows) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << "technique,invocations,total_ms,mean_ms\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%.3f,%.5f\n", r.technique.c_str(),
                  r.invocations, r.total_ms, r.mean_ms);
    out << buf;
  }
}

}  // namespace genart
