#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "genart/error.hpp"
#include "genart/rng.hpp"

namespace genart {

class Canvas;

// One gene argument. Integers and reals serialize distinctly (reals use
// shortest round-trip form), categorical values are bare tokens.
using ParamValue = std::variant<std::int64_t, double, std::string>;

struct ParamDomain {
  enum class Kind { IntegerRange, RealRange, Categorical };

  std::string name;
  Kind kind = Kind::IntegerRange;
  std::int64_t int_min = 0, int_max = 0;
  double real_min = 0.0, real_max = 0.0;
  std::vector<std::string> categories;

  static ParamDomain integer(std::string name, std::int64_t lo, std::int64_t hi);
  static ParamDomain real(std::string name, double lo, double hi);
  static ParamDomain categorical(std::string name, std::vector<std::string> options);

  bool contains(const ParamValue& v) const;
  ParamValue sample(Rng& rng) const;
};

struct TechniqueGene {
  std::string technique;
  std::vector<ParamValue> args;

  std::int64_t int_arg(std::size_t i) const;
  double real_arg(std::size_t i) const;  // promotes integer args
  const std::string& str_arg(std::size_t i) const;

  friend bool operator==(const TechniqueGene&, const TechniqueGene&) = default;
};

// Ordered, variable-length drawing program. Never empty.
struct Genome {
  std::vector<TechniqueGene> genes;

  std::size_t size() const { return genes.size(); }

  friend bool operator==(const Genome&, const Genome&) = default;
};

using DrawFn = std::function<void(Canvas&, const TechniqueGene&, Rng&)>;

struct TechniqueDescriptor {
  std::string name;
  std::vector<ParamDomain> params;
  // Excluded techniques are never sampled by variation but stay renderable.
  bool excluded = false;
};

// The grammar: technique names, their parameter domains, and how to render
// them. Names are unique; insertion order is preserved.
class TechniqueRegistry {
 public:
  void add(TechniqueDescriptor descriptor, DrawFn draw);

  const TechniqueDescriptor* find(std::string_view name) const;
  const TechniqueDescriptor& at(std::string_view name) const;
  const DrawFn& draw_fn(std::string_view name) const;

  std::span<const TechniqueDescriptor> descriptors() const { return descriptors_; }
  std::size_t size() const { return descriptors_.size(); }
  std::size_t non_excluded_count() const;
  std::vector<std::size_t> sampleable_indices() const;

  void set_excluded(std::string_view name, bool excluded);

 private:
  std::vector<TechniqueDescriptor> descriptors_;
  std::vector<DrawFn> draw_fns_;
};

// --- sampling ---

// Uniform over non-excluded techniques, each parameter uniform over its
// domain. Throws ConfigError when every technique is excluded.
TechniqueGene random_gene(const TechniqueRegistry& registry, Rng& rng);

// Length uniform on [min_len, max_len]; 1 <= min_len <= max_len.
Genome random_genome(const TechniqueRegistry& registry, Rng& rng, int min_len,
                     int max_len);

// --- text format ---
//
//   gene  := name [":" value ("," value)*]
//   text  := gene ("\n" gene)*
std::string serialize(const TechniqueGene& gene);
std::string serialize(const Genome& genome);

// Validates every gene against the registry. Error classes: EmptyInput,
// UnknownTechnique, ArityMismatch, ValueOutOfDomain, MalformedValue.
Genome parse_genome(std::string_view text, const TechniqueRegistry& registry);

// --- variation ---

struct CrossoverResult {
  Genome child;
  bool crossed = false;  // false means the child is a clone of parent a
};

// With probability `crossover_rate`: child = a[0..cut_a) + b[cut_b..end)
// with cut_a uniform on [1, len(a)] and cut_b uniform on [0, len(b)-1],
// sampled independently. Otherwise a deep clone of `a`. Every child gene is
// an unmodified parent gene either way.
CrossoverResult crossover_detail(const Genome& a, const Genome& b, Rng& rng,
                                 double crossover_rate = 0.5);
Genome crossover(const Genome& a, const Genome& b, Rng& rng,
                 double crossover_rate = 0.5);

enum class MutationMode { None, ReplaceGene, ResampleParams, ShuffleOrder };

struct MutationResult {
  Genome genome;
  MutationMode mode = MutationMode::None;
};

// With probability 1 - mutation_rate the genome passes through unchanged;
// otherwise exactly one mode is applied, chosen uniformly: replace one gene
// with a fresh random gene, resample all parameters of one gene, or shuffle
// the gene order. Length never changes.
MutationResult mutate_detail(const Genome& genome, const TechniqueRegistry& registry,
                             Rng& rng, double mutation_rate = 0.4);
Genome mutate(const Genome& genome, const TechniqueRegistry& registry, Rng& rng,
              double mutation_rate = 0.4);

// len(genes) minus the number of distinct serialized gene strings.
int duplicate_gene_count(const Genome& genome);

}  // namespace genart
