#include "interlab/scalar.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <string>

#include "interlab/error.hpp"

namespace interlab {
namespace {

// mpq_get_d truncates; pick the nearer of the two neighbours instead.
double nearest_double(const mpq_class& q) {
  const double d = q.get_d();
  if (std::isinf(d) || sgn(q) == 0) return d;
  const double away = std::nextafter(d, sgn(q) > 0 ? HUGE_VAL : -HUGE_VAL);
  if (std::isinf(away)) return d;
  const mpq_class lo_gap = abs(q - mpq_class(d));
  const mpq_class hi_gap = abs(mpq_class(away) - q);
  if (lo_gap < hi_gap) return d;
  if (hi_gap < lo_gap) return away;
  std::int64_t bits = 0;
  std::memcpy(&bits, &d, sizeof bits);
  return (bits & 1) == 0 ? d : away;
}


Backing backing_from_env() {
  const char* env = std::getenv("INTERLAB_BACKING");
  if (env != nullptr && std::string_view(env) == "float") return Backing::kFloat;
  return Backing::kRational;
}

std::atomic<Backing>& backing_slot() {
  static std::atomic<Backing> slot{backing_from_env()};
  return slot;
}

double checked(double d) {
  if (std::isnan(d)) throw DomainError("NaN produced by float arithmetic");
  if (std::isinf(d)) throw DomainError("float overflow: finite scalar became infinite");
  return d;
}

mpq_class to_mpq(double d) {
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), d);
  return q;
}

}  // namespace

Backing backing() { return backing_slot().load(std::memory_order_relaxed); }
void set_backing(Backing b) { backing_slot().store(b, std::memory_order_relaxed); }

std::string_view backing_name(Backing b) {
  return b == Backing::kFloat ? "float" : "rational";
}

Scalar::Scalar(int v) : Scalar(static_cast<long long>(v)) {}
Scalar::Scalar(long v) : Scalar(static_cast<long long>(v)) {}
Scalar::Scalar(long long v) {
  if (backing() == Backing::kFloat) {
    value_ = static_cast<double>(v);
  } else {
    static_assert(sizeof(long) == sizeof(long long));
    mpz_class z(static_cast<long>(v));
    value_ = mpq_class(z);
  }
}

Scalar::Scalar(const mpq_class& q) {
  if (backing() == Backing::kFloat) {
    value_ = checked(nearest_double(q));
  } else {
    mpq_class c(q);
    c.canonicalize();
    value_ = std::move(c);
  }
}

Scalar Scalar::from_double(double d) { return Scalar(checked(d)); }

Scalar Scalar::ratio(long long num, long long den) {
  if (den == 0) throw DomainError("zero denominator");
  return Scalar(num) / Scalar(den);
}

Scalar Scalar::parse(std::string_view text) {
  auto fail = [&] { return InputError("not a number: '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Scalar num = parse(text.substr(0, slash));
    Scalar den = parse(text.substr(slash + 1));
    if (den.is_zero()) throw fail();
    return num / den;
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long long scale = 0;
  bool seen_digit = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    digits += text[i];
    seen_digit = true;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      digits += text[i];
      --scale;
      seen_digit = true;
    }
  }
  if (!seen_digit) throw fail();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    long long exponent = 0;
    std::string_view rest = text.substr(i);
    if (!rest.empty() && rest.front() == '+') rest.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), exponent);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) throw fail();
    if (exponent > 4000 || exponent < -4000) throw fail();
    scale += exponent;
    i = text.size();
  }
  if (i != text.size()) throw fail();

  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  mpq_class q = scale < 0 ? mpq_class(mantissa, power) : mpq_class(mantissa * power);
  return Scalar(q);
}


double Scalar::to_double() const {
  if (is_exact()) return nearest_double(exact());
  return std::get<double>(value_);
}

int Scalar::sign() const {
  if (is_exact()) return sgn(exact());
  double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

bool Scalar::is_integer() const {
  if (is_exact()) return exact().get_den() == 1;
  double d = std::get<double>(value_);
  return std::floor(d) == d;
}

std::string Scalar::to_string() const {
  if (is_exact()) return exact().get_str();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(value_));
  return std::string(buf, ptr);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-exact()));
  return Scalar(-std::get<double>(value_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(mpq_class(a.exact() + b.exact()));
  return Scalar::from_double(a.to_double() + b.to_double());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(mpq_class(a.exact() - b.exact()));
  return Scalar::from_double(a.to_double() - b.to_double());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return Scalar(mpq_class(a.exact() * b.exact()));
  return Scalar::from_double(a.to_double() * b.to_double());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.is_exact() && b.is_exact()) return Scalar(mpq_class(a.exact() / b.exact()));
  return Scalar::from_double(a.to_double() / b.to_double());
}

bool operator==(const Scalar& a, const Scalar& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c;
  if (a.is_exact() && b.is_exact()) {
    c = cmp(a.exact(), b.exact());
  } else if (a.is_exact()) {
    c = cmp(a.exact(), to_mpq(b.to_double()));
  } else if (b.is_exact()) {
    c = cmp(to_mpq(a.to_double()), b.exact());
  } else {
    double x = a.to_double(), y = b.to_double();
    c = (x > y) - (x < y);
  }
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

Scalar pow(const Scalar& base, const Scalar& exponent) {
  if (base.sign() < 0) throw DomainError("pow of a negative base");
  if (base.is_exact() && exponent.is_exact() && exponent.is_integer() && exponent.sign() >= 0 &&
      exponent.exact() <= 64) {
    unsigned long e = exponent.exact().get_num().get_ui();
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.exact().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.exact().get_den_mpz_t(), e);
    return Scalar(mpq_class(num, den));
  }
  return Scalar::from_double(std::pow(base.to_double(), exponent.to_double()));
}

}  // namespace interlab
