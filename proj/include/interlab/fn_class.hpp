#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "interlab/ext_real.hpp"
#include "interlab/measure_space.hpp"

namespace interlab {

/// A measurable function Omega -> [-inf, +inf] taken modulo mu-a.e. equality.
///
/// The representative is stored as given (values on null atoms are kept), but
/// equality and the order only look at atoms of positive weight.
class FnClass {
 public:
  /// Throws InputError unless there is exactly one value per atom.
  FnClass(SpacePtr space, std::vector<ExtReal> values);
  static FnClass constant(SpacePtr space, const ExtReal& v);

  const SpacePtr& space() const { return space_; }
  const MeasureSpace& measure_space() const { return *space_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<ExtReal>& values() const { return values_; }
  const ExtReal& operator[](std::size_t i) const { return values_[i]; }

  /// Agreement on every atom of positive weight.
  friend bool operator==(const FnClass& f, const FnClass& g);

 private:
  SpacePtr space_;
  std::vector<ExtReal> values_;
};

/// Membership in the semi-integrable spaces: L1 plus (integrable positive
/// part), L1 minus (integrable negative part), both, or neither.
enum class IntegrabilityTag { kL1Full, kL1Plus, kL1Minus, kL0Only };
std::string_view tag_name(IntegrabilityTag t);
bool in_l1_plus(IntegrabilityTag t);
bool in_l1_minus(IntegrabilityTag t);

/// Throws InputError when f and g live on different spaces.
void require_same_space(const FnClass& f, const FnClass& g);

/// The mu-pointwise order: f <= g on every atom of positive weight.
bool mu_leq(const FnClass& f, const FnClass& g);
/// f <= g on every atom, null or not.
bool pointwise_leq(const FnClass& f, const FnClass& g);

/// Per-atom minimum over a nonempty family. On an atomic space this is a
/// representative of the essential infimum.
FnClass pointwise_inf(std::span<const FnClass> family);
FnClass pointwise_inf(const FnClass& f, const FnClass& g);
FnClass pointwise_sup(const FnClass& f, const FnClass& g);

/// (f+, f-) with f = f+ + (-f-) atomwise.
std::pair<FnClass, FnClass> pos_neg_parts(const FnClass& f);
FnClass negate(const FnClass& f);
FnClass scale(const Scalar& lambda, const FnClass& f);
FnClass lower_sum(const FnClass& f, const FnClass& g);
FnClass upper_sum(const FnClass& f, const FnClass& g);

IntegrabilityTag classify(const FnClass& f);

/// True when f(w) >= 0 on every atom of positive weight.
bool is_nonnegative(const FnClass& f);

struct LpNorm {
  ExtReal value;
  /// f was infinite on an atom of positive weight; value is +inf.
  bool infinite_on_support = false;
};

/// (sum_w weight * |f|^p)^(1/p) for p >= 1. Exact when p == 1 and the values
/// are exact; computed in double otherwise.
LpNorm lp_norm(const FnClass& f, const Scalar& p);

}  // namespace interlab
