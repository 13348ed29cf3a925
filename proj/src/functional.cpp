#include "interlab/functional.hpp"

#include "interlab/error.hpp"

namespace interlab {

ExtReal Functional::operator()(const FnClass& f) const {
  if (!in_domain(f)) throw DomainError("functional '" + name_ + "' is not defined on the given function");
  return eval_(f);
}

ScalarMap ScalarMap::affine(Scalar scale, Scalar shift) {
  std::string name = "affine(" + scale.to_string() + "," + shift.to_string() + ")";
  return {std::move(name), [scale, shift](const ExtReal& t) { return lower_add(scalar_mul(scale, t), ExtReal(shift)); },
          "affine", {ExtReal(scale), ExtReal(shift)}};
}

ScalarMap ScalarMap::clamp(ExtReal lo, ExtReal hi) {
  if (hi < lo) throw InputError("clamp with hi < lo");
  std::string name = "clamp(" + lo.to_string() + "," + hi.to_string() + ")";
  return {std::move(name), [lo, hi](const ExtReal& t) { return min(max(t, lo), hi); }, "clamp", {lo, hi}};
}

ScalarMap ScalarMap::step(ExtReal threshold) {
  std::string name = "step(" + threshold.to_string() + ")";
  return {std::move(name), [threshold](const ExtReal& t) { return t <= threshold ? ExtReal(0) : ExtReal(1); },
          "step", {threshold}};
}

std::optional<std::pair<ExtReal, ExtReal>> find_monotonicity_violation(const ScalarMap& g) {
  std::vector<ExtReal> grid{ExtReal::minus_inf()};
  for (int k = -20; k <= 20; ++k) grid.emplace_back(Scalar::ratio(k, 2));
  grid.push_back(ExtReal::plus_inf());
  std::vector<ExtReal> image;
  image.reserve(grid.size());
  for (const auto& t : grid) image.push_back(g.apply(t));
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (image[i + 1] < image[i]) return std::make_pair(grid[i], grid[i + 1]);
  }
  return std::nullopt;
}

Functional extended_lebesgue_functional() {
  return Functional("extended_lebesgue", ValueDomain::kL1Plus, lebesgue_extended, {true, true, true});
}

Functional outer_integral_functional() {
  return Functional("outer", ValueDomain::kAll, outer_integral, {true, false, true});
}

Functional inner_integral_functional() {
  return Functional("inner", ValueDomain::kAll, inner_integral, {true, false, true});
}

Functional choquet_functional(Capacity c) {
  return Functional("choquet", ValueDomain::kNonnegative, [c = std::move(c)](const FnClass& f) { return choquet(f, c); },
                    {true, true, false});
}

ExtReal ess_sup(const FnClass& f) {
  ExtReal best = ExtReal::minus_inf();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.measure_space().is_null_atom(i)) best = max(best, f[i]);
  }
  return best;
}

Functional ess_sup_functional() { return Functional("ess_sup", ValueDomain::kAll, ess_sup, {true, false, true}); }

Functional post_compose(const Functional& phi, const ScalarMap& g) {
  if (auto bad = find_monotonicity_violation(g)) {
    throw InputError("map '" + g.name + "' is not nondecreasing: g(" + bad->first.to_string() + ") > g(" +
                     bad->second.to_string() + ")");
  }
  FunctionalProperties props = phi.properties();
  // Continuity of g is not checked, so the continuity flag is not inherited.
  props.sequentially_inf_continuous = false;
  return Functional(g.name + " o " + phi.name(), phi.domain(),
                    [phi, g](const FnClass& f) { return g.apply(phi(f)); }, props);
}

Functional constant_functional(ExtReal value) {
  return Functional("constant(" + value.to_string() + ")", ValueDomain::kAll,
                    [value](const FnClass&) { return value; }, {true, true, true});
}

Functional make_builtin(const FunctionalSpec& spec) {
  switch (spec.kind) {
    case BuiltinKind::kExtendedLebesgue: return extended_lebesgue_functional();
    case BuiltinKind::kOuter: return outer_integral_functional();
    case BuiltinKind::kInner: return inner_integral_functional();
    case BuiltinKind::kEssSup: return ess_sup_functional();
    case BuiltinKind::kChoquet:
      if (!spec.capacity) throw InputError("choquet functional needs a capacity");
      return choquet_functional(*spec.capacity);
    case BuiltinKind::kPostCompose:
      if (!spec.inner || !spec.map) throw InputError("post_compose needs an inner functional and a map");
      return post_compose(make_builtin(*spec.inner), *spec.map);
  }
  throw InputError("unknown functional kind");
}

OrderCheckReport check_order_preserving(const Functional& phi, const SpacePtr& space, std::size_t trials,
                                        std::uint64_t seed) {
  Rng rng(seed);
  OrderCheckReport report;
  const bool free_on_null = phi.properties().null_invariant;
  for (std::size_t t = 0; t < trials; ++t) {
    FnClass upper = random_fn(rng, space, phi.domain());
    FnClass lower = random_below(rng, upper, phi.domain(), free_on_null);
    ++report.trials;
    ExtReal lo = phi(lower);
    ExtReal hi = phi(upper);
    if (hi < lo) {
      ++report.violations;
      if (!report.witness) report.witness = OrderViolation{lower, upper, lo, hi};
    }
  }
  return report;
}

}  // namespace interlab
