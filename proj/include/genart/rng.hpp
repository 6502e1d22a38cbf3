#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace genart {

// xoshiro256++ with splitmix64 seeding. The standard <random> engines are
// fine but their distributions are implementation-defined; every sampled
// value in this project must be reproducible from a seed alone, so both the
// generator and the distributions live here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();

  // Uniform on [0, 1).
  double uniform_double();

  // Uniform on [lo, hi).
  double uniform_real(double lo, double hi);

  // Uniform integer on [lo, hi], inclusive. Unbiased (rejection sampling).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Uniform index on [0, n). n must be >= 1.
  std::size_t index(std::size_t n);

  // True with probability p.
  bool chance(double p);

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = index(i);
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t s_[4];
};

// One splitmix64 step; used for seed derivation.
std::uint64_t splitmix64(std::uint64_t& state);

// Deterministic combination of seed material into a fresh stream seed.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c);

// FNV-1a over bytes; used to derive render seeds from genome text.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace genart
