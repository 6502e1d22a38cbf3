#include <set>
#include <unordered_map>

#include "doctest.h"
#include "genart/genome.hpp"
#include "genart/techniques.hpp"
#include "support.hpp"

using namespace genart;

namespace {

// Registry mirroring the documented serialization example:
// circle-packing with (seed, attempts, palette).
TechniqueRegistry example_registry() {
  TechniqueRegistry reg;
  reg.add({"circle-packing",
           {ParamDomain::integer("seed", 0, 1000),
            ParamDomain::integer("attempts", 1, 1000),
            ParamDomain::integer("palette", 0, 9)}},
          nullptr);
  reg.add({"plain", {}}, nullptr);
  reg.add({"mixed",
           {ParamDomain::real("weight", 0.0, 1.0),
            ParamDomain::categorical("style", {"smooth", "ragged"})}},
          nullptr);
  return reg;
}

Genome make_genome(std::initializer_list<TechniqueGene> genes) {
  Genome g;
  g.genes = genes;
  return g;
}

}  // namespace

TEST_CASE("serialize formats per the grammar") {
  TechniqueGene gene{"circle-packing",
                     {std::int64_t{7}, std::int64_t{500}, std::int64_t{2}}};
  CHECK(serialize(gene) == "circle-packing:7,500,2");

  CHECK(serialize(TechniqueGene{"plain", {}}) == "plain");

  Genome g = make_genome({gene, {"plain", {}}});
  CHECK(serialize(g) == "circle-packing:7,500,2\nplain");
}

TEST_CASE("parse error classes") {
  const auto reg = example_registry();

  auto kind_of = [&](const std::string& text) {
    try {
      parse_genome(text, reg);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("expected a parse error for: ", text);
    return ParseErrorKind::EmptyInput;
  };

  CHECK(kind_of("") == ParseErrorKind::EmptyInput);
  CHECK(kind_of("nonexistent:1") == ParseErrorKind::UnknownTechnique);
  CHECK(kind_of("circle-packing:7,500") == ParseErrorKind::ArityMismatch);
  CHECK(kind_of("circle-packing:7,500,2,9") == ParseErrorKind::ArityMismatch);
  CHECK(kind_of("plain:3") == ParseErrorKind::ArityMismatch);
  CHECK(kind_of("circle-packing:7,5000,2") == ParseErrorKind::ValueOutOfDomain);
  CHECK(kind_of("circle-packing:7,abc,2") == ParseErrorKind::MalformedValue);
  CHECK(kind_of("mixed:0.5,jagged") == ParseErrorKind::ValueOutOfDomain);
  CHECK(kind_of("mixed:2.5,smooth") == ParseErrorKind::ValueOutOfDomain);
  CHECK(kind_of("circle-packing:7,500,2\n\nplain") == ParseErrorKind::MalformedValue);
}

TEST_CASE("round-trip on random genomes") {
  const auto reg = default_registry();
  Rng rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const Genome g = random_genome(reg, rng, 1, 5);
    const Genome back = parse_genome(serialize(g), reg);
    REQUIRE(back == g);
  }
}

TEST_CASE("categorical and real values round-trip") {
  const auto reg = example_registry();
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Genome g;
    TechniqueGene gene;
    gene.technique = "mixed";
    gene.args = {rng.uniform_real(0.0, 1.0),
                 std::string(rng.chance(0.5) ? "smooth" : "ragged")};
    g.genes.push_back(gene);
    CHECK(parse_genome(serialize(g), reg) == g);
  }
}

TEST_CASE("random_gene samples uniformly over non-excluded techniques") {
  auto reg = default_registry();
  Rng rng(123);

  std::unordered_map<std::string, int> counts;
  for (int i = 0; i < 10000; ++i) ++counts[random_gene(reg, rng).technique];

  REQUIRE(counts.size() == 4);
  for (const auto& [name, n] : counts) {
    CHECK(n >= 2000);  // frequency in [0.20, 0.30]
    CHECK(n <= 3000);
  }
}

TEST_CASE("random_gene never samples excluded techniques") {
  auto reg = default_registry();
  reg.set_excluded("flow-field", true);
  Rng rng(99);
  for (int i = 0; i < 10000; ++i)
    CHECK(random_gene(reg, rng).technique != "flow-field");
}

TEST_CASE("random_gene with all techniques excluded is a configuration error") {
  auto reg = testsupport::dot_registry();
  reg.set_excluded("dot", true);
  Rng rng(1);
  CHECK_THROWS_AS(random_gene(reg, rng), ConfigError);
}

TEST_CASE("random_genome length distribution and bounds") {
  const auto reg = default_registry();
  Rng rng(5);

  SUBCASE("degenerate range") {
    for (int i = 0; i < 50; ++i) CHECK(random_genome(reg, rng, 3, 3).size() == 3);
  }

  SUBCASE("uniform over [1, 5]") {
    std::array<int, 6> counts{};
    for (int i = 0; i < 10000; ++i) ++counts[random_genome(reg, rng, 1, 5).size()];
    for (int len = 1; len <= 5; ++len) {
      CHECK(counts[len] >= 1500);  // frequency in [0.15, 0.25]
      CHECK(counts[len] <= 2500);
    }
  }

  SUBCASE("invalid bounds") {
    CHECK_THROWS_AS(random_genome(reg, rng, 0, 3), ConfigError);
    CHECK_THROWS_AS(random_genome(reg, rng, 4, 3), ConfigError);
  }
}

TEST_CASE("crossover cut mechanics") {
  Rng rng(11);
  const auto reg = example_registry();
  const TechniqueGene g1{"circle-packing", {std::int64_t{1}, std::int64_t{1}, std::int64_t{1}}};
  const TechniqueGene g2{"circle-packing", {std::int64_t{2}, std::int64_t{2}, std::int64_t{2}}};
  const TechniqueGene h1{"circle-packing", {std::int64_t{3}, std::int64_t{3}, std::int64_t{3}}};
  const TechniqueGene h2{"circle-packing", {std::int64_t{4}, std::int64_t{4}, std::int64_t{4}}};

  const Genome a = make_genome({g1, g2});
  const Genome b = make_genome({h1, h2});

  // Drive until the crossover branch picks cuts (1, 1) -> [g1, h2].
  bool seen = false;
  for (int i = 0; i < 1000 && !seen; ++i) {
    const CrossoverResult r = crossover_detail(a, b, rng, 1.0);
    REQUIRE(r.crossed);
    REQUIRE(r.child.size() >= 1);
    if (r.child == make_genome({g1, h2})) seen = true;
    // Every child gene must be an unmodified parent gene.
    for (const auto& gene : r.child.genes) {
      const bool from_parent = gene == g1 || gene == g2 || gene == h1 || gene == h2;
      REQUIRE(from_parent);
    }
  }
  CHECK(seen);
}

TEST_CASE("crossover clone branch frequency is near one half") {
  Rng rng(17);
  const Genome a = make_genome({TechniqueGene{"plain", {}}});
  const Genome b = make_genome({TechniqueGene{"plain", {}}});
  int clones = 0;
  for (int i = 0; i < 10000; ++i)
    if (!crossover_detail(a, b, rng).crossed) ++clones;
  CHECK(clones >= 4700);
  CHECK(clones <= 5300);
}

TEST_CASE("clone branch returns parent a exactly") {
  const auto reg = default_registry();
  Rng rng(3);
  const Genome a = random_genome(reg, rng, 2, 4);
  const Genome b = random_genome(reg, rng, 2, 4);
  const CrossoverResult r = crossover_detail(a, b, rng, 0.0);
  CHECK_FALSE(r.crossed);
  CHECK(r.child == a);
}

TEST_CASE("mutate application frequency and mode behavior") {
  const auto reg = default_registry();
  Rng rng(29);

  SUBCASE("application frequency near 0.4") {
    const Genome g = random_genome(reg, rng, 3, 3);
    int applied = 0;
    for (int i = 0; i < 10000; ++i)
      if (mutate_detail(g, reg, rng, 0.4).mode != MutationMode::None) ++applied;
    CHECK(applied >= 3700);
    CHECK(applied <= 4300);
  }

  SUBCASE("length is always preserved") {
    for (int i = 0; i < 500; ++i) {
      const Genome g = random_genome(reg, rng, 1, 6);
      CHECK(mutate(g, reg, rng, 1.0).size() == g.size());
    }
  }

  SUBCASE("shuffle preserves the gene multiset") {
    for (int trial = 0; trial < 1000; ++trial) {
      const Genome g = random_genome(reg, rng, 2, 6);
      MutationResult r = mutate_detail(g, reg, rng, 1.0);
      while (r.mode != MutationMode::ShuffleOrder) r = mutate_detail(g, reg, rng, 1.0);
      std::multiset<std::string> before, after;
      for (const auto& gene : g.genes) before.insert(serialize(gene));
      for (const auto& gene : r.genome.genes) after.insert(serialize(gene));
      REQUIRE(before == after);
    }
  }

  SUBCASE("shuffling one gene is the identity") {
    const Genome g = random_genome(reg, rng, 1, 1);
    for (int i = 0; i < 50; ++i) {
      MutationResult r = mutate_detail(g, reg, rng, 1.0);
      if (r.mode == MutationMode::ShuffleOrder) CHECK(r.genome == g);
    }
  }

  SUBCASE("resampling a zero-parameter gene is the identity") {
    const auto dot = testsupport::dot_registry();
    Genome g = make_genome({TechniqueGene{"dot", {}}});
    for (int i = 0; i < 50; ++i) {
      MutationResult r = mutate_detail(g, dot, rng, 1.0);
      if (r.mode == MutationMode::ResampleParams) CHECK(r.genome == g);
    }
  }

  SUBCASE("mutation never introduces excluded techniques") {
    auto excl = default_registry();
    excl.set_excluded("flow-field", true);
    Genome g = make_genome({TechniqueGene{"basic-trig",
                                          {std::int64_t{0}, std::int64_t{1}, 0.1, 1.0,
                                           0.0, 0.5, std::int64_t{1}}}});
    for (int i = 0; i < 2000; ++i) {
      g = mutate(g, excl, rng, 1.0);
      for (const auto& gene : g.genes) CHECK(gene.technique != "flow-field");
    }
  }
}

TEST_CASE("variation closure: children re-parse after serialization") {
  const auto reg = default_registry();
  Rng rng(31);
  Genome a = random_genome(reg, rng, 1, 5);
  Genome b = random_genome(reg, rng, 1, 5);
  for (int i = 0; i < 300; ++i) {
    Genome child = mutate(crossover(a, b, rng), reg, rng);
    REQUIRE(child.size() >= 1);
    REQUIRE(parse_genome(serialize(child), reg) == child);
    a = std::move(b);
    b = std::move(child);
  }
}

TEST_CASE("duplicate_gene_count uses full serialized equality") {
  const TechniqueGene a{"plain", {}};
  const TechniqueGene b{"circle-packing",
                        {std::int64_t{1}, std::int64_t{2}, std::int64_t{3}}};
  TechniqueGene b2 = b;
  b2.args[0] = std::int64_t{9};  // same technique, different parameters

  CHECK(duplicate_gene_count(make_genome({a, a, b})) == 1);
  CHECK(duplicate_gene_count(make_genome({a, b, b2})) == 0);
  CHECK(duplicate_gene_count(make_genome({a, a, a, b, b})) == 3);
  CHECK(duplicate_gene_count(make_genome({a})) == 0);
}
