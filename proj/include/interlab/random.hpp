#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "interlab/ext_real.hpp"
#include "interlab/fn_class.hpp"
#include "interlab/integrals.hpp"

namespace interlab {

/// Seeded generator. Draws are reduced from raw mt19937_64 output so that a
/// seed reproduces the same stream on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n). n > 0.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::size_t>(hi - lo + 1)));
  }
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }
  template <class T>
  const T& pick(std::span<const T> items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// Which functions a generator may produce.
enum class ValueDomain { kAll, kNonnegative, kL1Plus, kL1Minus, kSemiIntegrable };

/// {-inf, -3, -2, -1, -1/2, 0, 1/2, 1, 2, 3, +inf}
const std::vector<ExtReal>& value_grid();
/// The finite members of value_grid().
std::vector<ExtReal> finite_value_grid();

bool in_value_domain(const FnClass& f, ValueDomain d);

/// Weights drawn from {0, 1/2, 1, 2, 3}, with at least one positive weight.
SpacePtr random_space(Rng& rng, std::size_t atoms);
/// Per-atom draws from `grid` restricted to the domain. Domain
/// restrictions are enforced on every atom, null or not.
FnClass random_fn(Rng& rng, const SpacePtr& space, ValueDomain d, std::span<const ExtReal> grid);
FnClass random_fn(Rng& rng, const SpacePtr& space, ValueDomain d);
/// A function f <= g on every atom that stays in the domain. When
/// `free_on_null` is set, values on null atoms are drawn independently of g.
FnClass random_below(Rng& rng, const FnClass& g, ValueDomain d, bool free_on_null);
/// A monotone table capacity with values in {0, 1/4, ..., 2}.
Capacity random_capacity(Rng& rng, const SpacePtr& space);

}  // namespace interlab
