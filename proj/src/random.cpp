#include "interlab/random.hpp"

#include <algorithm>

namespace interlab {

const std::vector<ExtReal>& value_grid() {
  static const std::vector<ExtReal> grid = [] {
    std::vector<ExtReal> g{ExtReal::minus_inf()};
    for (const char* s : {"-3", "-2", "-1", "-1/2", "0", "1/2", "1", "2", "3"}) g.push_back(ExtReal::parse(s));
    g.push_back(ExtReal::plus_inf());
    return g;
  }();
  return grid;
}

std::vector<ExtReal> finite_value_grid() {
  std::vector<ExtReal> out;
  for (const auto& v : value_grid()) {
    if (v.is_finite()) out.push_back(v);
  }
  return out;
}

namespace {

bool value_allowed(const ExtReal& v, ValueDomain d, bool null_atom) {
  switch (d) {
    case ValueDomain::kAll:
    case ValueDomain::kSemiIntegrable: return true;
    case ValueDomain::kNonnegative: return v.sign() >= 0;
    case ValueDomain::kL1Plus: return null_atom || !v.is_plus_inf();
    case ValueDomain::kL1Minus: return null_atom || !v.is_minus_inf();
  }
  return true;
}

}  // namespace

bool in_value_domain(const FnClass& f, ValueDomain d) {
  switch (d) {
    case ValueDomain::kAll: return true;
    case ValueDomain::kNonnegative:
      return std::all_of(f.values().begin(), f.values().end(), [](const ExtReal& v) { return v.sign() >= 0; });
    case ValueDomain::kL1Plus: return in_l1_plus(classify(f));
    case ValueDomain::kL1Minus: return in_l1_minus(classify(f));
    case ValueDomain::kSemiIntegrable: return classify(f) != IntegrabilityTag::kL0Only;
  }
  return false;
}

SpacePtr random_space(Rng& rng, std::size_t atoms) {
  static const std::vector<Scalar> weights{Scalar(0), Scalar::ratio(1, 2), Scalar(1), Scalar(2), Scalar(3)};
  std::vector<Scalar> w;
  for (std::size_t i = 0; i < atoms; ++i) w.push_back(rng.pick(std::span<const Scalar>(weights)));
  if (std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); })) w[rng.below(atoms)] = Scalar(1);
  return MeasureSpace::make(std::move(w));
}

FnClass random_fn(Rng& rng, const SpacePtr& space, ValueDomain d, std::span<const ExtReal> grid) {
  for (;;) {
    std::vector<ExtReal> values;
    for (std::size_t i = 0; i < space->size(); ++i) {
      std::vector<ExtReal> allowed;
      for (const auto& v : grid) {
        if (value_allowed(v, d, space->is_null_atom(i))) allowed.push_back(v);
      }
      values.push_back(rng.pick(std::span<const ExtReal>(allowed)));
    }
    FnClass f(space, std::move(values));
    if (in_value_domain(f, d)) return f;
  }
}

FnClass random_fn(Rng& rng, const SpacePtr& space, ValueDomain d) {
  return random_fn(rng, space, d, value_grid());
}

FnClass random_below(Rng& rng, const FnClass& g, ValueDomain d, bool free_on_null) {
  const MeasureSpace& space = g.measure_space();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<ExtReal> values;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const bool null_atom = space.is_null_atom(i);
      std::vector<ExtReal> allowed;
      for (const auto& v : value_grid()) {
        if ((v <= g[i] || (free_on_null && null_atom)) && value_allowed(v, d, null_atom)) allowed.push_back(v);
      }
      allowed.push_back(g[i]);
      values.push_back(rng.pick(std::span<const ExtReal>(allowed)));
    }
    FnClass f(g.space(), std::move(values));
    if (in_value_domain(f, d)) return f;
  }
  return g;
}

Capacity random_capacity(Rng& rng, const SpacePtr& space) {
  const std::size_t n = space->size();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::vector<Scalar> table(subsets);
  // Visit subsets by increasing mask: every proper subset of `mask` precedes it.
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    Scalar floor;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) floor = std::max(floor, table[mask & ~(std::uint64_t{1} << i)]);
    }
    Scalar bumped = floor + Scalar::ratio(static_cast<long long>(rng.below(3)), 4);
    table[mask] = std::min(bumped, std::max(floor, Scalar(2)));
  }
  std::vector<ExtReal> values(table.begin(), table.end());
  return Capacity::table(space, std::move(values));
}

}  // namespace interlab
