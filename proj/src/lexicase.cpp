#include "genart/lexicase.hpp"

#include <algorithm>
#include <numeric>

#include "genart/error.hpp"

namespace genart {

int ObjectiveMask::count() const {
  int n = 0;
  for (Objective o : kAllObjectives)
    if (contains(o)) ++n;
  return n;
}

std::vector<Objective> ObjectiveMask::active() const {
  std::vector<Objective> out;
  for (Objective o : kAllObjectives)
    if (contains(o)) out.push_back(o);
  return out;
}

ObjectiveMask ObjectiveMask::all() { return {0x3f}; }

ObjectiveMask ObjectiveMask::of(std::initializer_list<Objective> objectives) {
  ObjectiveMask m;
  for (Objective o : objectives) m.bits |= static_cast<std::uint8_t>(1u << static_cast<int>(o));
  return m;
}

ObjectiveMask ObjectiveMask::from_index(int truth_table_number) {
  if (truth_table_number < 1 || truth_table_number > 63)
    throw ConfigError("objective mask index must be in [1, 63], got " +
                      std::to_string(truth_table_number));
  return {static_cast<std::uint8_t>(truth_table_number)};
}

ObjectiveMask ObjectiveMask::from_names(std::string_view names) {
  if (names == "all") return all();
  ObjectiveMask m;
  std::size_t start = 0;
  while (start <= names.size()) {
    const std::size_t pos = names.find(',', start);
    const std::string_view token =
        names.substr(start, pos == std::string_view::npos ? names.size() - start
                                                          : pos - start);
    const auto o = objective_from_name(token);
    if (!o)
      throw ConfigError("unknown objective '" + std::string(token) +
                        "' (expected pc, gc, ut, cd, ns, ac)");
    m.bits |= static_cast<std::uint8_t>(1u << static_cast<int>(*o));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (m.empty()) throw ConfigError("objective mask is empty");
  return m;
}

std::string ObjectiveMask::to_names() const {
  std::string out;
  for (Objective o : kAllObjectives) {
    if (!contains(o)) continue;
    if (!out.empty()) out += ',';
    out += objective_name(o);
  }
  return out;
}

std::vector<std::size_t> lexicase_pool(std::span<const FitnessVector> population,
                                       std::span<const Objective> objective_order,
                                       double epsilon,
                                       std::vector<std::size_t> pool) {
  if (pool.empty()) {
    pool.resize(population.size());
    std::iota(pool.begin(), pool.end(), std::size_t{0});
  }

  for (Objective o : objective_order) {
    if (pool.size() <= 1) break;  // sole survivor is selected immediately

    const bool maximize = is_maximize(o);
    auto oriented = [&](std::size_t i) {
      const double v = population[i][o];
      return maximize ? v : -v;
    };

    double lo = oriented(pool[0]), hi = oriented(pool[0]);
    for (std::size_t i : pool) {
      lo = std::min(lo, oriented(i));
      hi = std::max(hi, oriented(i));
    }
    if (hi == lo) continue;  // degenerate range keeps everyone

    // The pool best normalizes to exactly 1.0, so the band is [1 - eps, 1].
    const double threshold = 1.0 - epsilon;
    std::vector<std::size_t> kept;
    kept.reserve(pool.size());
    for (std::size_t i : pool)
      if ((oriented(i) - lo) / (hi - lo) >= threshold) kept.push_back(i);
    pool = std::move(kept);
  }
  return pool;
}

std::size_t lexicase_select(std::span<const FitnessVector> population,
                            const ObjectiveMask& mask, double epsilon, Rng& rng) {
  if (population.empty()) throw ConfigError("cannot select from an empty population");
  if (mask.empty()) throw ConfigError("selection requires a non-empty objective mask");

  std::vector<Objective> order = mask.active();
  rng.shuffle(order);
  const std::vector<std::size_t> pool = lexicase_pool(population, order, epsilon);
  return pool[rng.index(pool.size())];
}

}  // namespace genart
