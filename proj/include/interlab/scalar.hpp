#pragma once

#include <compare>
#include <gmpxx.h>
#include <string>
#include <string_view>
#include <variant>

namespace interlab {

/// How finite values are stored. Rational backing keeps every computation on
/// rational inputs exact; float backing stores doubles everywhere.
enum class Backing { kRational, kFloat };

/// The process-wide backing. Initialised from INTERLAB_BACKING
/// ("rational" or "float", default rational) on first use.
Backing backing();
void set_backing(Backing b);
std::string_view backing_name(Backing b);

/// A finite scalar: an exact rational or a double. Arithmetic between two
/// exact values is exact; as soon as one operand is a double the result is a
/// double. NaN is rejected at construction.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(int v);  // NOLINT(google-explicit-constructor)
  Scalar(long v);  // NOLINT
  Scalar(long long v);  // NOLINT
  explicit Scalar(const mpq_class& q);
  /// Stores a double. Throws DomainError on NaN or infinity.
  static Scalar from_double(double d);
  /// Exact rational p/q (canonicalised). Honors the float backing.
  static Scalar ratio(long long num, long long den);
  /// Parses "3", "-2.5", "1e-3", "1/3". Decimal text is read exactly.
  static Scalar parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& exact() const { return std::get<mpq_class>(value_); }
  double to_double() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  /// "7", "-1/2" for exact values; shortest round-trip text for doubles.
  std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Throws DomainError on division by zero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  explicit Scalar(double d) : value_(d) {}
  std::variant<mpq_class, double> value_;
};

Scalar abs(const Scalar& s);
/// base^exponent for base >= 0. Exact when both are exact and the exponent is a
/// nonnegative integer; otherwise computed in double.
Scalar pow(const Scalar& base, const Scalar& exponent);

}  // namespace interlab
