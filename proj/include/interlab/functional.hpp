#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "interlab/ext_real.hpp"
#include "interlab/fn_class.hpp"
#include "interlab/integrals.hpp"
#include "interlab/random.hpp"

namespace interlab {

/// Declared properties of a functional. These are declarations checked by
/// sampling, not proofs.
struct FunctionalProperties {
  bool order_preserving = false;
  bool sequentially_inf_continuous = false;
  /// Value depends only on the mu-a.e. class (ignores null atoms).
  bool null_invariant = true;
};

/// An order-preserving map Phi from a set of functions into [-inf, +inf].
class Functional {
 public:
  using Eval = std::function<ExtReal(const FnClass&)>;

  Functional(std::string name, ValueDomain domain, Eval eval, FunctionalProperties props)
      : name_(std::move(name)), domain_(domain), eval_(std::move(eval)), props_(props) {}

  const std::string& name() const { return name_; }
  ValueDomain domain() const { return domain_; }
  const FunctionalProperties& properties() const { return props_; }
  bool in_domain(const FnClass& f) const { return in_value_domain(f, domain_); }

  /// Throws DomainError when f is outside the domain.
  ExtReal operator()(const FnClass& f) const;

 private:
  std::string name_;
  ValueDomain domain_;
  Eval eval_;
  FunctionalProperties props_;
};

/// A scalar map g: [-inf, +inf] -> [-inf, +inf] used to post-compose a
/// functional, g o Phi.
struct ScalarMap {
  std::string name;
  std::function<ExtReal(const ExtReal&)> apply;
  /// "affine", "clamp", "step" or empty for ad hoc maps, with the factory
  /// arguments, so a map can be serialized.
  std::string kind;
  std::vector<ExtReal> params;

  /// t -> scale * t + shift (scalar_mul conventions, so 0 * inf = 0).
  static ScalarMap affine(Scalar scale, Scalar shift);
  /// t -> min(max(t, lo), hi)
  static ScalarMap clamp(ExtReal lo, ExtReal hi);
  /// t -> 0 for t <= threshold, 1 above.
  static ScalarMap step(ExtReal threshold);
};

/// Checks g on {-inf, -10, -9.5, ..., 10, +inf}; returns the first pair
/// s < t with g(s) > g(t), if any.
std::optional<std::pair<ExtReal, ExtReal>> find_monotonicity_violation(const ScalarMap& g);

enum class BuiltinKind { kExtendedLebesgue, kOuter, kInner, kChoquet, kEssSup, kPostCompose };

struct FunctionalSpec {
  BuiltinKind kind = BuiltinKind::kExtendedLebesgue;
  std::optional<Capacity> capacity;        // kChoquet
  std::shared_ptr<FunctionalSpec> inner;   // kPostCompose
  std::optional<ScalarMap> map;            // kPostCompose
};

/// Builds a registered functional. Throws InputError when a Choquet spec has
/// no capacity or a post-composition map is detected to be non-monotone.
Functional make_builtin(const FunctionalSpec& spec);

Functional extended_lebesgue_functional();
Functional outer_integral_functional();
Functional inner_integral_functional();
Functional choquet_functional(Capacity c);
/// Maximum over atoms of positive weight; -inf when every atom is null.
Functional ess_sup_functional();
Functional post_compose(const Functional& phi, const ScalarMap& g);
Functional constant_functional(ExtReal value);

ExtReal ess_sup(const FnClass& f);

struct OrderViolation {
  FnClass lower;
  FnClass upper;
  ExtReal phi_lower;
  ExtReal phi_upper;
};

struct OrderCheckReport {
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::optional<OrderViolation> witness;  // first violation found
};

/// Samples `trials` pairs f <= g in Phi's domain on `space` and reports pairs
/// with Phi(f) > Phi(g). Deterministic in (space, trials, seed).
OrderCheckReport check_order_preserving(const Functional& phi, const SpacePtr& space, std::size_t trials,
                                        std::uint64_t seed);

}  // namespace interlab
