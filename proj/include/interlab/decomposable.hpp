#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "interlab/ext_real.hpp"
#include "interlab/fn_class.hpp"
#include "interlab/functional.hpp"
#include "interlab/measure_space.hpp"

namespace interlab {

/// A point of the control set V (a small vector of scalars).
using Control = std::vector<Scalar>;

/// f(omega, u) tabulated on atoms x controls.
class Integrand {
 public:
  /// `table[i][j]` is f(atom i, control j). Throws InputError on ragged or
  /// empty tables, duplicate controls, or mixed control dimensions.
  Integrand(SpacePtr space, std::vector<Control> controls, std::vector<std::vector<ExtReal>> table);

  const SpacePtr& space() const { return space_; }
  const std::vector<Control>& controls() const { return controls_; }
  std::size_t atoms() const { return table_.size(); }
  std::size_t control_count() const { return controls_.size(); }
  const ExtReal& operator()(std::size_t atom, std::size_t control) const { return table_[atom][control]; }
  const std::vector<std::vector<ExtReal>>& table() const { return table_; }

 private:
  SpacePtr space_;
  std::vector<Control> controls_;
  std::vector<std::vector<ExtReal>> table_;
};

/// A selection omega -> V, stored as a control index per atom.
using Selection = std::vector<std::size_t>;

/// Either an explicit list of selections or a product of per-atom admissible
/// control sets.
class SelectionSet {
 public:
  enum class Kind { kExplicit, kProduct };

  /// Throws InputError when empty or when an index is out of range.
  static SelectionSet explicit_set(std::size_t atoms, std::size_t controls, std::vector<Selection> members);
  static SelectionSet product(std::size_t controls, std::vector<std::vector<std::size_t>> admissible);
  static SelectionSet full_product(std::size_t atoms, std::size_t controls);

  Kind kind() const { return kind_; }
  std::size_t atoms() const { return atoms_; }
  std::size_t control_count() const { return controls_; }
  const std::vector<Selection>& members() const { return members_; }
  /// Per-atom set of controls used by some member (the admissible sets for a
  /// product), sorted.
  const std::vector<std::vector<std::size_t>>& projections() const { return projections_; }

  /// Number of selections, saturating at UINT64_MAX.
  std::uint64_t count() const;
  /// Exact membership.
  bool contains(const Selection& u) const;
  /// Membership up to the values on null atoms of `space`.
  bool contains_ae(const Selection& u, const MeasureSpace& space) const;
  /// Visits every member in a fixed order; stops early when `visit` returns
  /// false.
  void for_each(const std::function<bool(const Selection&)>& visit) const;

 private:
  SelectionSet() = default;
  Kind kind_ = Kind::kExplicit;
  std::size_t atoms_ = 0;
  std::size_t controls_ = 0;
  std::vector<Selection> members_;
  std::vector<std::vector<std::size_t>> projections_;
};

/// G(u) = f(., u(.))
FnClass apply_G(const Integrand& f, const Selection& u);
/// Per-atom minimum of f(omega, .) over all of V.
FnClass pointwise_min_over_controls(const Integrand& f);
/// Per-atom minimum of f(omega, .) over the projections of U.
FnClass pointwise_min_over(const Integrand& f, const SelectionSet& U);

struct Patch {
  std::size_t first = 0;   // member index of u
  std::size_t second = 0;  // member index of v
  /// Atoms where the patch takes v.
  AtomSet where;
  Selection patched;
};

struct DecomposableResult {
  bool decomposable = true;
  /// A patch u on A^c, v on A that is not in the set.
  std::optional<Patch> witness;
  /// Result of the projection-product test, which must agree.
  bool equals_projection_product = true;
};

/// Closure under pairwise patching, compared modulo null atoms. Throws
/// InvariantFailure if the patch scan and the projection-product test
/// disagree.
DecomposableResult is_decomposable(const SelectionSet& U, const MeasureSpace& space);

struct RwOptions {
  std::uint64_t enumeration_budget = 1000000;
  Scalar tolerance;
};

struct RwReport {
  /// min over U of the outer integral of G(u)
  ExtReal lhs;
  /// outer integral of the per-atom minimum
  ExtReal rhs;
  bool equal = false;
  DecomposableResult decomposable;
  /// A selection attaining lhs.
  Selection minimizer;
  std::uint64_t selections = 0;
  /// "holds", "hypothesis violated, inequality strict" or
  /// "hypothesis violated, equality".
  std::string verdict;
  std::vector<std::string> notes;
  std::optional<std::string> invariant_failure;
};

/// Brute-force interchange of minimization and outer integration over U.
/// Throws DomainError when |U| exceeds the budget or no selection has
/// G(u) in L1+.
RwReport verify_rw_interchange(const Integrand& f, const SelectionSet& U, const RwOptions& options = {});

struct ArgminMismatch {
  Selection selection;
  bool in_argmin = false;
  bool pointwise_argmin = false;
};

struct RwArgminReport {
  bool applicable = true;
  ExtReal value;
  std::size_t argmin_count = 0;
  std::vector<ArgminMismatch> mismatches;
  std::vector<std::string> notes;
  bool holds() const { return applicable && mismatches.empty(); }
};

/// u minimizes the integral over U iff u(omega) minimizes f(omega, .) over
/// the admissible controls on every non-null atom. Not applicable when the
/// common value is -inf.
RwArgminReport verify_rw_argmin(const Integrand& f, const SelectionSet& U, const RwOptions& options = {});

struct ShapiroScenario {
  Functional phi;
  Scalar p = Scalar(1);
  Integrand integrand;
  SelectionSet selections;
  /// The sequence u_0, u_1, ... (a prefix).
  std::vector<Selection> sequence;
  /// Defaults to the per-atom minimum over the projections of U.
  std::optional<FnClass> declared_g_flat;
  RwOptions options;
};

struct ShapiroReport {
  bool s1_finite = true;
  bool s2a_norm_convergence = true;
  bool s2b_liminf = true;
  std::vector<ExtReal> norm_gaps;
  std::vector<ExtReal> phi_along_sequence;
  ExtReal phi_g_flat;
  /// inf over U of Phi(G(u)).
  ExtReal inf_phi;
  bool conclusion = false;
  bool sampled = false;
  std::vector<std::string> failed_hypotheses;
  std::vector<std::string> notes;
  std::optional<std::string> invariant_failure;
};

/// Checks the hypotheses along the prefix and the conclusion
/// inf over U of Phi(G(u)) = Phi(G flat). Throws InputError unless the space
/// is a probability space and p >= 1.
ShapiroReport verify_shapiro(const ShapiroScenario& sc);

}  // namespace interlab
