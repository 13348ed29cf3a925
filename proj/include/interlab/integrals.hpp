#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "interlab/ext_real.hpp"
#include "interlab/fn_class.hpp"
#include "interlab/measure_space.hpp"

namespace interlab {

/// A monotone set function c on the power set of a finite space with
/// c(empty) = 0. Either a dense table indexed by atom mask (at most
/// kMaxTableAtoms atoms) or a power distortion of the space's measure,
/// c(A) = (mu(A) / mu(Omega))^gamma * mu(Omega).
///
/// On a finite space every capacity is continuous from above.
class Capacity {
 public:
  static constexpr std::size_t kMaxTableAtoms = 20;

  /// `values[mask]` is c of the atom set encoded by `mask`. Throws InputError
  /// on a wrong table size, c(empty) != 0, a negative value or a monotonicity
  /// violation.
  static Capacity table(SpacePtr space, std::vector<ExtReal> values);
  /// Throws InputError unless gamma > 0.
  static Capacity distortion(SpacePtr space, Scalar gamma);
  /// The space's own measure.
  static Capacity of_measure(SpacePtr space) { return distortion(std::move(space), Scalar(1)); }

  const SpacePtr& space() const { return space_; }
  ExtReal operator()(const AtomSet& s) const;
  bool is_table() const { return !gamma_.has_value(); }
  const std::optional<Scalar>& gamma() const { return gamma_; }
  const std::vector<ExtReal>& table_values() const { return table_; }
  static constexpr bool continuous_from_above() { return true; }

 private:
  Capacity(SpacePtr space, std::vector<ExtReal> table, std::optional<Scalar> gamma)
      : space_(std::move(space)), table_(std::move(table)), gamma_(std::move(gamma)) {}

  SpacePtr space_;
  std::vector<ExtReal> table_;
  std::optional<Scalar> gamma_;
};

/// Lebesgue integral of a nonnegative function: sum of weight * f(w), with
/// 0 * (+inf) = 0 on null atoms. Throws DomainError if f < 0 on an atom of
/// positive weight.
ExtReal lebesgue_nonneg(const FnClass& f);

/// Integral of f+ plus the negation of the integral of f-, defined on L1+ and
/// L1-. Throws DomainError for functions that are not semi-integrable.
ExtReal lebesgue_extended(const FnClass& f);

/// Integral of f+ upper-added to the negated integral of f-. Defined on all
/// of L0; agrees with lebesgue_extended on semi-integrable functions.
ExtReal outer_integral(const FnClass& f);

/// Integral of f+ lower-added to the negated integral of f-. Always
/// <= outer_integral(f) and equal to -outer_integral(-f).
ExtReal inner_integral(const FnClass& f);

/// Choquet integral of f >= 0 w.r.t. c: the integral over t >= 0 of
/// c({f > t}), in closed form over the sorted distinct values of f. An
/// +inf plateau contributes +inf iff c({f = +inf}) > 0.
///
/// The capacity does not see mu, so nonnegativity is required on every
/// atom. Throws DomainError on a negative value and InputError on a
/// capacity from another space.
ExtReal choquet(const FnClass& f, const Capacity& c);

/// Choquet integral extended to nonpositive functions by
/// choquet(-f, c) negated. Mixed-sign functions throw DomainError.
ExtReal choquet_signed(const FnClass& f, const Capacity& c);

/// Finite-valued gap function x - y on atoms of positive weight (0 on null
/// atoms). Throws DomainError if x or y is infinite on such an atom.
FnClass finite_difference(const FnClass& x, const FnClass& y);

}  // namespace interlab
