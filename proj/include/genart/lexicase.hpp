#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "genart/fitness.hpp"

namespace genart {

// Which objectives participate in selection. Bit i of `bits` is objective i
// in truth-table order (pc, gc, ut, cd, ns, ac), so the mask's integer value
// is its experimental-configuration number (1..63).
struct ObjectiveMask {
  std::uint8_t bits = 0;

  bool contains(Objective o) const { return bits & (1u << static_cast<int>(o)); }
  int count() const;
  bool empty() const { return bits == 0; }
  int index() const { return bits; }  // truth-table number

  std::vector<Objective> active() const;

  static ObjectiveMask all();
  static ObjectiveMask of(std::initializer_list<Objective> objectives);
  static ObjectiveMask from_index(int truth_table_number);
  // Comma-separated subscripts, e.g. "ut,ac", or "all".
  static ObjectiveMask from_names(std::string_view names);
  std::string to_names() const;
};

// One epsilon-Lexicase filter pass with a fixed objective order. Starting
// from `pool` (all indices when empty), each objective's values are oriented
// so higher is fitter, min-max normalized over the current pool, and
// candidates below best - epsilon are dropped. A pool whose values are all
// equal passes through unchanged. Stops early once one candidate remains.
std::vector<std::size_t> lexicase_pool(std::span<const FitnessVector> population,
                                       std::span<const Objective> objective_order,
                                       double epsilon,
                                       std::vector<std::size_t> pool = {});

// Shuffles the mask's objectives, filters, then picks uniformly from the
// surviving pool.
std::size_t lexicase_select(std::span<const FitnessVector> population,
                            const ObjectiveMask& mask, double epsilon, Rng& rng);

}  // namespace genart
