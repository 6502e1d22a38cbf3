#include "genart/genome.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <unordered_set>

namespace genart {

// --- ParamDomain ---

ParamDomain ParamDomain::integer(std::string name, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw ConfigError("integer domain '" + name + "': min > max");
  ParamDomain d;
  d.name = std::move(name);
  d.kind = Kind::IntegerRange;
  d.int_min = lo;
  d.int_max = hi;
  return d;
}

ParamDomain ParamDomain::real(std::string name, double lo, double hi) {
  if (lo > hi) throw ConfigError("real domain '" + name + "': min > max");
  ParamDomain d;
  d.name = std::move(name);
  d.kind = Kind::RealRange;
  d.real_min = lo;
  d.real_max = hi;
  return d;
}

ParamDomain ParamDomain::categorical(std::string name, std::vector<std::string> options) {
  if (options.empty())
    throw ConfigError("categorical domain '" + name + "' has no options");
  ParamDomain d;
  d.name = std::move(name);
  d.kind = Kind::Categorical;
  d.categories = std::move(options);
  return d;
}

bool ParamDomain::contains(const ParamValue& v) const {
  switch (kind) {
    case Kind::IntegerRange:
      if (const auto* i = std::get_if<std::int64_t>(&v))
        return *i >= int_min && *i <= int_max;
      return false;
    case Kind::RealRange:
      if (const auto* r = std::get_if<double>(&v))
        return std::isfinite(*r) && *r >= real_min && *r <= real_max;
      return false;
    case Kind::Categorical:
      if (const auto* s = std::get_if<std::string>(&v))
        return std::find(categories.begin(), categories.end(), *s) !=
               categories.end();
      return false;
  }
  return false;
}

ParamValue ParamDomain::sample(Rng& rng) const {
  switch (kind) {
    case Kind::IntegerRange:
      return rng.uniform_int(int_min, int_max);
    case Kind::RealRange:
      return rng.uniform_real(real_min, real_max);
    case Kind::Categorical:
      return categories[rng.index(categories.size())];
  }
  return std::int64_t{0};
}

// --- TechniqueGene accessors ---

std::int64_t TechniqueGene::int_arg(std::size_t i) const {
  return std::get<std::int64_t>(args.at(i));
}

double TechniqueGene::real_arg(std::size_t i) const {
  const ParamValue& v = args.at(i);
  if (const auto* r = std::get_if<double>(&v)) return *r;
  return static_cast<double>(std::get<std::int64_t>(v));
}

const std::string& TechniqueGene::str_arg(std::size_t i) const {
  return std::get<std::string>(args.at(i));
}

// --- TechniqueRegistry ---

void TechniqueRegistry::add(TechniqueDescriptor descriptor, DrawFn draw) {
  if (find(descriptor.name))
    throw ConfigError("duplicate technique name: " + descriptor.name);
  descriptors_.push_back(std::move(descriptor));
  draw_fns_.push_back(std::move(draw));
}

const TechniqueDescriptor* TechniqueRegistry::find(std::string_view name) const {
  for (const auto& d : descriptors_)
    if (d.name == name) return &d;
  return nullptr;
}

const TechniqueDescriptor& TechniqueRegistry::at(std::string_view name) const {
  if (const auto* d = find(name)) return *d;
  throw ConfigError("unknown technique: " + std::string(name));
}

const DrawFn& TechniqueRegistry::draw_fn(std::string_view name) const {
  for (std::size_t i = 0; i < descriptors_.size(); ++i)
    if (descriptors_[i].name == name) return draw_fns_[i];
  throw ConfigError("unknown technique: " + std::string(name));
}

std::size_t TechniqueRegistry::non_excluded_count() const {
  std::size_t n = 0;
  for (const auto& d : descriptors_)
    if (!d.excluded) ++n;
  return n;
}

std::vector<std::size_t> TechniqueRegistry::sampleable_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < descriptors_.size(); ++i)
    if (!descriptors_[i].excluded) out.push_back(i);
  return out;
}

void TechniqueRegistry::set_excluded(std::string_view name, bool excluded) {
  for (auto& d : descriptors_) {
    if (d.name == name) {
      d.excluded = excluded;
      return;
    }
  }
  throw ConfigError("unknown technique: " + std::string(name));
}

// --- sampling ---

TechniqueGene random_gene(const TechniqueRegistry& registry, Rng& rng) {
  const auto pool = registry.sampleable_indices();
  if (pool.empty())
    throw ConfigError("registry has no non-excluded techniques to sample");
  const auto& d = registry.descriptors()[pool[rng.index(pool.size())]];
  TechniqueGene gene;
  gene.technique = d.name;
  gene.args.reserve(d.params.size());
  for (const auto& p : d.params) gene.args.push_back(p.sample(rng));
  return gene;
}

Genome random_genome(const TechniqueRegistry& registry, Rng& rng, int min_len,
                     int max_len) {
  if (min_len < 1 || min_len > max_len)
    throw ConfigError("genome length bounds require 1 <= min_len <= max_len");
  const int len = static_cast<int>(rng.uniform_int(min_len, max_len));
  Genome g;
  g.genes.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) g.genes.push_back(random_gene(registry, rng));
  return g;
}

// --- text format ---

namespace {

std::string format_value(const ParamValue& v) {
  char buf[64];
  if (const auto* i = std::get_if<std::int64_t>(&v)) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, *i);
    return std::string(buf, end);
  }
  if (const auto* r = std::get_if<double>(&v)) {
    // Shortest round-trip form.
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, *r);
    return std::string(buf, end);
  }
  return std::get<std::string>(v);
}

ParamValue parse_value(std::string_view token, const ParamDomain& domain, int line) {
  switch (domain.kind) {
    case ParamDomain::Kind::IntegerRange: {
      std::int64_t out = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(ParseErrorKind::MalformedValue, line,
                         "expected integer for '" + domain.name + "', got '" +
                             std::string(token) + "'");
      ParamValue v{out};
      if (!domain.contains(v))
        throw ParseError(ParseErrorKind::ValueOutOfDomain, line,
                         "value " + std::string(token) + " outside [" +
                             std::to_string(domain.int_min) + ", " +
                             std::to_string(domain.int_max) + "] for '" +
                             domain.name + "'");
      return v;
    }
    case ParamDomain::Kind::RealRange: {
      double out = 0.0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(ParseErrorKind::MalformedValue, line,
                         "expected real for '" + domain.name + "', got '" +
                             std::string(token) + "'");
      ParamValue v{out};
      if (!domain.contains(v))
        throw ParseError(ParseErrorKind::ValueOutOfDomain, line,
                         "value " + std::string(token) + " outside domain of '" +
                             domain.name + "'");
      return v;
    }
    case ParamDomain::Kind::Categorical: {
      ParamValue v{std::string(token)};
      if (!domain.contains(v))
        throw ParseError(ParseErrorKind::ValueOutOfDomain, line,
                         "'" + std::string(token) + "' is not an option of '" +
                             domain.name + "'");
      return v;
    }
  }
  throw ParseError(ParseErrorKind::MalformedValue, line, "unreachable");
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

TechniqueGene parse_gene(std::string_view text, const TechniqueRegistry& registry,
                         int line) {
  const std::size_t colon = text.find(':');
  const std::string_view name =
      colon == std::string_view::npos ? text : text.substr(0, colon);
  if (name.empty())
    throw ParseError(ParseErrorKind::MalformedValue, line, "missing technique name");

  const TechniqueDescriptor* d = registry.find(name);
  if (!d)
    throw ParseError(ParseErrorKind::UnknownTechnique, line,
                     "unknown technique '" + std::string(name) + "'");

  std::vector<std::string_view> tokens;
  if (colon != std::string_view::npos)
    tokens = split(text.substr(colon + 1), ',');

  if (tokens.size() != d->params.size())
    throw ParseError(ParseErrorKind::ArityMismatch, line,
                     "'" + d->name + "' takes " + std::to_string(d->params.size()) +
                         " argument(s), got " + std::to_string(tokens.size()));

  TechniqueGene gene;
  gene.technique = d->name;
  gene.args.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i)
    gene.args.push_back(parse_value(tokens[i], d->params[i], line));
  return gene;
}

}  // namespace

std::string serialize(const TechniqueGene& gene) {
  std::string out = gene.technique;
  for (std::size_t i = 0; i < gene.args.size(); ++i) {
    out += i == 0 ? ':' : ',';
    out += format_value(gene.args[i]);
  }
  return out;
}

std::string serialize(const Genome& genome) {
  std::string out;
  for (std::size_t i = 0; i < genome.genes.size(); ++i) {
    if (i) out += '\n';
    out += serialize(genome.genes[i]);
  }
  return out;
}

Genome parse_genome(std::string_view text, const TechniqueRegistry& registry) {
  if (text.empty())
    throw ParseError(ParseErrorKind::EmptyInput, 1, "empty genome text");

  // A single trailing newline is tolerated; interior blank lines are not.
  if (text.back() == '\n') text.remove_suffix(1);
  if (text.empty())
    throw ParseError(ParseErrorKind::EmptyInput, 1, "empty genome text");

  Genome genome;
  int line = 0;
  for (std::string_view part : split(text, '\n')) {
    ++line;
    if (part.empty())
      throw ParseError(ParseErrorKind::MalformedValue, line, "blank gene line");
    genome.genes.push_back(parse_gene(part, registry, line));
  }
  return genome;
}

// --- variation ---

CrossoverResult crossover_detail(const Genome& a, const Genome& b, Rng& rng,
                                 double crossover_rate) {
  assert(!a.genes.empty() && !b.genes.empty());
  if (!rng.chance(crossover_rate)) return {a, false};

  const auto cut_a =
      static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(a.size())));
  const auto cut_b = static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<std::int64_t>(b.size()) - 1));

  Genome child;
  child.genes.reserve(cut_a + (b.size() - cut_b));
  child.genes.assign(a.genes.begin(), a.genes.begin() + cut_a);
  child.genes.insert(child.genes.end(), b.genes.begin() + cut_b, b.genes.end());
  assert(!child.genes.empty());
  return {std::move(child), true};
}

Genome crossover(const Genome& a, const Genome& b, Rng& rng, double crossover_rate) {
  return crossover_detail(a, b, rng, crossover_rate).child;
}

MutationResult mutate_detail(const Genome& genome, const TechniqueRegistry& registry,
                             Rng& rng, double mutation_rate) {
  assert(!genome.genes.empty());
  if (!rng.chance(mutation_rate)) return {genome, MutationMode::None};

  MutationResult result{genome, MutationMode::None};
  switch (rng.index(3)) {
    case 0: {
      result.mode = MutationMode::ReplaceGene;
      const std::size_t at = rng.index(genome.size());
      result.genome.genes[at] = random_gene(registry, rng);
      break;
    }
    case 1: {
      result.mode = MutationMode::ResampleParams;
      const std::size_t at = rng.index(genome.size());
      TechniqueGene& gene = result.genome.genes[at];
      const TechniqueDescriptor& d = registry.at(gene.technique);
      for (std::size_t i = 0; i < d.params.size(); ++i)
        gene.args[i] = d.params[i].sample(rng);
      break;
    }
    case 2: {
      result.mode = MutationMode::ShuffleOrder;
      rng.shuffle(result.genome.genes);
      break;
    }
  }
  return result;
}

Genome mutate(const Genome& genome, const TechniqueRegistry& registry, Rng& rng,
              double mutation_rate) {
  return mutate_detail(genome, registry, rng, mutation_rate).genome;
}

int duplicate_gene_count(const Genome& genome) {
  std::unordered_set<std::string> distinct;
  for (const auto& gene : genome.genes) distinct.insert(serialize(gene));
  return static_cast<int>(genome.genes.size() - distinct.size());
}

}  // namespace genart
