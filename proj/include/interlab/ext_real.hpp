#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "interlab/scalar.hpp"

namespace interlab {

/// An element of the extended real line [-inf, +inf].
///
/// Two additions are provided because ordinary addition is undefined on
/// (+inf) + (-inf): lower_add makes -inf absorbing, upper_add makes +inf
/// absorbing. Scalar multiplication follows 0 * (+-inf) = 0.
class ExtReal {
 public:
  enum class Kind { kMinusInf, kFinite, kPlusInf };

  ExtReal() = default;
  ExtReal(Scalar v) : kind_(Kind::kFinite), value_(std::move(v)) {}  // NOLINT
  ExtReal(int v) : ExtReal(Scalar(v)) {}  // NOLINT

  static ExtReal plus_inf() { return ExtReal(Kind::kPlusInf); }
  static ExtReal minus_inf() { return ExtReal(Kind::kMinusInf); }
  static ExtReal zero() { return ExtReal(Scalar(0)); }
  /// Parses a scalar or one of "+inf", "inf", "-inf".
  static ExtReal parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_plus_inf() const { return kind_ == Kind::kPlusInf; }
  bool is_minus_inf() const { return kind_ == Kind::kMinusInf; }
  /// Precondition: is_finite().
  const Scalar& value() const;
  int sign() const;
  bool is_exact() const { return !is_finite() || value_.is_exact(); }

  /// "+inf", "-inf" or the scalar text.
  std::string to_string() const;
  double to_double() const;

  friend bool operator==(const ExtReal& a, const ExtReal& b);
  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);

 private:
  explicit ExtReal(Kind k) : kind_(k) {}
  Kind kind_ = Kind::kFinite;
  Scalar value_;
};

/// Addition with -inf absorbing: (+inf) + (-inf) = -inf.
ExtReal lower_add(const ExtReal& a, const ExtReal& b);
/// Addition with +inf absorbing: (+inf) + (-inf) = +inf.
ExtReal upper_add(const ExtReal& a, const ExtReal& b);
/// Ordinary addition; throws DomainError on (+inf) + (-inf).
ExtReal plain_add(const ExtReal& a, const ExtReal& b);
ExtReal scalar_mul(const Scalar& lambda, const ExtReal& a);
ExtReal neg(const ExtReal& a);
ExtReal min(const ExtReal& a, const ExtReal& b);
ExtReal max(const ExtReal& a, const ExtReal& b);
/// max(0, a)
ExtReal pos_part(const ExtReal& a);
/// max(0, -a)
ExtReal neg_part(const ExtReal& a);
/// Equality for exact values; within `tolerance` when both are finite. The
/// infinities only ever equal themselves.
bool approx_equal(const ExtReal& a, const ExtReal& b, const Scalar& tolerance);
/// a <= b + tolerance, with infinities compared exactly.
bool approx_leq(const ExtReal& a, const ExtReal& b, const Scalar& tolerance);

std::ostream& operator<<(std::ostream& os, const ExtReal& a);

}  // namespace interlab
