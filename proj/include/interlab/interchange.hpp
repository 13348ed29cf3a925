#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "interlab/ext_real.hpp"
#include "interlab/fn_class.hpp"
#include "interlab/functional.hpp"

namespace interlab {

/// A nonempty finite family of functions on one space.
struct Family {
  enum class Origin { kLiteral, kGenerated };

  /// Throws InputError on an empty list or mixed spaces.
  explicit Family(std::vector<FnClass> members, Origin origin = Origin::kLiteral);

  std::vector<FnClass> members;
  Origin origin;

  std::size_t size() const { return members.size(); }
  const SpacePtr& space() const { return members.front().space(); }
  /// Per-atom minimum over the members selected by `indices`.
  FnClass infimum_of(std::span<const std::size_t> indices) const;
  FnClass infimum() const;
};

struct InfDirectedResult {
  bool directed = true;
  /// A pair with no common lower bound in the family.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Every pair of members has a member below both, in the mu-pointwise order
/// or, with `mu_order` false, in the plain pointwise order (the one that
/// matters for functionals that see null atoms, such as Choquet integrals).
InfDirectedResult is_inf_directed(const Family& family, bool mu_order = true);

enum class DirectedVerdict {
  kYes,
  kNo,
  /// The infimum of Phi over the family is -inf, so the condition holds vacuously.
  kDiverging,
  kUndetermined,
};
std::string_view verdict_name(DirectedVerdict v);

struct DirectedOptions {
  /// Families up to this size get an exhaustive subset scan.
  std::size_t subset_budget = 12;
  /// Extra random subsets checked on larger families.
  std::size_t sampled_subsets = 256;
  std::uint64_t seed = 0;
  Scalar tolerance;
};

struct PhiDirectedResult {
  DirectedVerdict verdict = DirectedVerdict::kYes;
  /// The subset scan was not exhaustive.
  bool sampled = false;
  std::size_t subsets_checked = 0;
  /// Inf of Phi over the whole family.
  ExtReal inf_phi;
  /// A violating finite subset (smallest size first), when verdict is kNo.
  std::vector<std::size_t> witness;
  /// Phi of the infimum of `witness`.
  ExtReal witness_value;
  /// Full-family condition, which implies every other one for an
  /// order-preserving Phi.
  bool shortcut_holds = true;
  bool shortcut_agrees = true;
};

/// Checks inf_{x in X} Phi(x) <= Phi(inf of S) for finite subsets S of X.
/// Throws DomainError if Phi is undefined on a member or a required infimum.
PhiDirectedResult is_phi_inf_directed(const Family& family, const Functional& phi, const DirectedOptions& options = {});

enum class InterchangeVerdict { kHolds, kFails, kHoldsInLimit, kInconclusive };
std::string_view verdict_name(InterchangeVerdict v);

struct InterchangeReport {
  /// inf over the family of Phi(x)
  ExtReal lhs;
  /// Phi(inf over the family of x)
  ExtReal rhs;
  bool lhs_diverging = false;
  bool rhs_diverging = false;
  /// Sequence inputs only: the sides as evaluated at the end of the prefix,
  /// before divergence detection replaces them by -inf.
  std::optional<ExtReal> prefix_lhs;
  std::optional<ExtReal> prefix_rhs;
  PhiDirectedResult phi_inf_directed;
  InterchangeVerdict interchange = InterchangeVerdict::kHolds;
  std::vector<std::string> notes;
  /// Set when the library's own consistency checks fail.
  std::optional<std::string> invariant_failure;

  bool holds() const {
    return interchange == InterchangeVerdict::kHolds || interchange == InterchangeVerdict::kHoldsInLimit;
  }
};

struct InterchangeOptions {
  DirectedOptions directed;
  /// Sampled order-preservation trials for functionals that do not declare it.
  std::size_t order_check_trials = 200;
};

/// Computes both sides of the interchange formula for a finite family and
/// cross-checks the verdict against Phi-inf-directedness. A disagreement is
/// recorded in `invariant_failure`.
InterchangeReport verify_interchange(const Family& family, const Functional& phi, const InterchangeOptions& options = {});

/// A sequence x_0, x_1, ... given by a generator and examined on a finite
/// prefix. Later terms may live on larger truncations of a countable space;
/// earlier terms are extended by `fill_value` on the new atoms.
struct SequenceSpec {
  std::string name;
  std::function<FnClass(std::size_t)> generator;
  std::size_t prefix_len = 1;
  std::optional<FnClass> declared_limit;
  Scalar divergence_threshold = Scalar(1000000000);
  ExtReal fill_value = ExtReal::zero();

  /// The family repeated cyclically, with a prefix of two full cycles.
  static SequenceSpec from_family(const Family& family);
};

/// Extends f to `target` (a superset of f's atoms with equal weights),
/// using `fill` on the new atoms. Throws InputError when the spaces do not
/// align.
FnClass align_to(const FnClass& f, const SpacePtr& target, const ExtReal& fill);

/// How a prefix of extended reals behaves.
struct PrefixBehavior {
  enum class Kind {
    /// The second half of the prefix is constant (or -inf is reached).
    kStable,
    /// Nonincreasing and falling without bound.
    kDiverging,
    /// Nonincreasing, not yet stable, no sign of divergence.
    kMonotone,
    /// Not monotone and not stable.
    kInconclusive,
  };
  Kind kind = Kind::kStable;
  /// The stable value, or the last prefix value otherwise.
  ExtReal value;
};
std::string_view behavior_name(PrefixBehavior::Kind k);

/// Classifies a prefix. A nonincreasing prefix is diverging when it drops
/// below -threshold, or when it falls at least as much over the last quarter
/// of the prefix as over the quarter before.
PrefixBehavior analyze_prefix(std::span<const ExtReal> values, const Scalar& threshold, const Scalar& tolerance);

/// True when a nonincreasing prefix approaches `target` from above: the last
/// gap is within tolerance, or the gap at least roughly halves each time the
/// index doubles (ratio <= 3/5 over the last two doublings).
bool converges_to(std::span<const ExtReal> values, const ExtReal& target, const Scalar& tolerance);

/// Evaluates the sequence prefix: lhs from the running minimum of Phi(x_n),
/// rhs from Phi(declared_limit) or from Phi of the running infima, with
/// divergence detection on both sides.
InterchangeReport verify_interchange_sequence(const SequenceSpec& seq, const Functional& phi,
                                              const InterchangeOptions& options = {});

struct SeqContinuityReport {
  enum class Basis { kExact, kLimit, kDivergence };
  enum class Verdict { kHolds, kFails, kInconclusive };
  Verdict verdict = Verdict::kHolds;
  Basis basis = Basis::kExact;
  /// inf over the prefix of Phi(x_n)
  ExtReal lhs;
  /// Phi of the limit
  ExtReal rhs;
  PrefixBehavior lhs_behavior;
  std::vector<std::string> notes;
};
std::string_view verdict_name(SeqContinuityReport::Verdict v);
std::string_view basis_name(SeqContinuityReport::Basis b);

/// Checks inf_n Phi(x_n) <= Phi(lim x_n) along a nonincreasing sequence.
/// The limit is the declared one, or the last prefix term. Throws
/// InputError when the prefix is not nonincreasing or the declared limit is
/// not below every term.
SeqContinuityReport check_seq_inf_continuity(const Functional& phi, const SequenceSpec& seq,
                                             const Scalar& tolerance = Scalar(0));

/// Integrably inf-directed in gap form, for real-valued integrable families:
/// for every finite subset S, min over x in X of the integral of
/// (x - inf S) is <= 0.
struct GapDirectedResult {
  /// False when some member is infinite on an atom of positive weight; the
  /// gap is not evaluated then.
  bool applicable = true;
  bool directed = true;
  std::vector<std::size_t> witness;
  ExtReal witness_gap;
};
GapDirectedResult is_gap_inf_directed(const Family& family, const DirectedOptions& options = {});

/// Deterministic subset enumeration used by the scans: all nonempty subsets
/// ordered by size then index order when size <= budget, otherwise singletons,
/// pairs, the full set and `samples` random subsets.
std::vector<std::vector<std::size_t>> scan_subsets(std::size_t size, const DirectedOptions& options, bool* sampled);

}  // namespace interlab
