#include "interlab/ext_real.hpp"

#include <limits>

#include "interlab/error.hpp"

namespace interlab {

ExtReal ExtReal::parse(std::string_view text) {
  if (text == "+inf" || text == "inf" || text == "+Infinity" || text == "Infinity") return plus_inf();
  if (text == "-inf" || text == "-Infinity") return minus_inf();
  return ExtReal(Scalar::parse(text));
}

const Scalar& ExtReal::value() const {
  if (!is_finite()) throw DomainError("value() of an infinite ExtReal");
  return value_;
}

int ExtReal::sign() const {
  switch (kind_) {
    case Kind::kMinusInf: return -1;
    case Kind::kPlusInf: return 1;
    case Kind::kFinite: break;
  }
  return value_.sign();
}

std::string ExtReal::to_string() const {
  switch (kind_) {
    case Kind::kMinusInf: return "-inf";
    case Kind::kPlusInf: return "+inf";
    case Kind::kFinite: break;
  }
  return value_.to_string();
}

double ExtReal::to_double() const {
  switch (kind_) {
    case Kind::kMinusInf: return -std::numeric_limits<double>::infinity();
    case Kind::kPlusInf: return std::numeric_limits<double>::infinity();
    case Kind::kFinite: break;
  }
  return value_.to_double();
}

bool operator==(const ExtReal& a, const ExtReal& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_ || !a.is_finite()) return a.kind_ <=> b.kind_;
  return a.value_ <=> b.value_;
}

ExtReal lower_add(const ExtReal& a, const ExtReal& b) {
  if (a.is_minus_inf() || b.is_minus_inf()) return ExtReal::minus_inf();
  if (a.is_plus_inf() || b.is_plus_inf()) return ExtReal::plus_inf();
  return ExtReal(a.value() + b.value());
}

ExtReal upper_add(const ExtReal& a, const ExtReal& b) {
  if (a.is_plus_inf() || b.is_plus_inf()) return ExtReal::plus_inf();
  if (a.is_minus_inf() || b.is_minus_inf()) return ExtReal::minus_inf();
  return ExtReal(a.value() + b.value());
}

ExtReal plain_add(const ExtReal& a, const ExtReal& b) {
  if ((a.is_plus_inf() && b.is_minus_inf()) || (a.is_minus_inf() && b.is_plus_inf())) {
    throw DomainError("(+inf) + (-inf) is undefined for ordinary addition");
  }
  return lower_add(a, b);
}

ExtReal scalar_mul(const Scalar& lambda, const ExtReal& a) {
  if (a.is_finite()) return ExtReal(lambda * a.value());
  int s = lambda.sign();
  if (s == 0) return ExtReal::zero();
  return (s > 0) == a.is_plus_inf() ? ExtReal::plus_inf() : ExtReal::minus_inf();
}

ExtReal neg(const ExtReal& a) {
  if (a.is_plus_inf()) return ExtReal::minus_inf();
  if (a.is_minus_inf()) return ExtReal::plus_inf();
  return ExtReal(-a.value());
}

ExtReal min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }
ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
ExtReal pos_part(const ExtReal& a) { return max(ExtReal::zero(), a); }
ExtReal neg_part(const ExtReal& a) { return max(ExtReal::zero(), neg(a)); }

bool approx_equal(const ExtReal& a, const ExtReal& b, const Scalar& tolerance) {
  if (!a.is_finite() || !b.is_finite()) return a.kind() == b.kind();
  if (tolerance.is_zero()) return a.value() == b.value();
  return abs(a.value() - b.value()) <= tolerance;
}

bool approx_leq(const ExtReal& a, const ExtReal& b, const Scalar& tolerance) {
  if (a <= b) return true;
  if (!a.is_finite() || !b.is_finite()) return false;
  return a.value() - b.value() <= tolerance;
}

std::ostream& operator<<(std::ostream& os, const ExtReal& a) { return os << a.to_string(); }

}  // namespace interlab
