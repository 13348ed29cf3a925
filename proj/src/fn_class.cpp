#include "interlab/fn_class.hpp"

#include "interlab/error.hpp"
#include "interlab/integrals.hpp"

namespace interlab {

FnClass::FnClass(SpacePtr space, std::vector<ExtReal> values) : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw InputError("function without a measure space");
  if (values_.size() != space_->size()) {
    throw InputError("function has " + std::to_string(values_.size()) + " values but the space has " +
                     std::to_string(space_->size()) + " atoms");
  }
}

FnClass FnClass::constant(SpacePtr space, const ExtReal& v) {
  std::size_t n = space->size();
  return FnClass(std::move(space), std::vector<ExtReal>(n, v));
}

bool operator==(const FnClass& f, const FnClass& g) {
  require_same_space(f, g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.measure_space().is_null_atom(i) && f[i] != g[i]) return false;
  }
  return true;
}

std::string_view tag_name(IntegrabilityTag t) {
  switch (t) {
    case IntegrabilityTag::kL1Full: return "L1";
    case IntegrabilityTag::kL1Plus: return "L1+";
    case IntegrabilityTag::kL1Minus: return "L1-";
    case IntegrabilityTag::kL0Only: return "L0";
  }
  return "?";
}

bool in_l1_plus(IntegrabilityTag t) { return t == IntegrabilityTag::kL1Plus || t == IntegrabilityTag::kL1Full; }
bool in_l1_minus(IntegrabilityTag t) { return t == IntegrabilityTag::kL1Minus || t == IntegrabilityTag::kL1Full; }

void require_same_space(const FnClass& f, const FnClass& g) {
  if (!same_space(f.space(), g.space())) throw InputError("functions live on different measure spaces");
}

bool mu_leq(const FnClass& f, const FnClass& g) {
  require_same_space(f, g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.measure_space().is_null_atom(i) && g[i] < f[i]) return false;
  }
  return true;
}

bool pointwise_leq(const FnClass& f, const FnClass& g) {
  require_same_space(f, g);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (g[i] < f[i]) return false;
  }
  return true;
}

namespace {

template <class Op>
FnClass zip(const FnClass& f, const FnClass& g, Op op) {
  require_same_space(f, g);
  std::vector<ExtReal> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(op(f[i], g[i]));
  return FnClass(f.space(), std::move(out));
}

template <class Op>
FnClass map(const FnClass& f, Op op) {
  std::vector<ExtReal> out;
  out.reserve(f.size());
  for (const auto& v : f.values()) out.push_back(op(v));
  return FnClass(f.space(), std::move(out));
}

}  // namespace

FnClass pointwise_inf(std::span<const FnClass> family) {
  if (family.empty()) throw InputError("infimum of an empty family");
  std::vector<ExtReal> out = family.front().values();
  for (const auto& g : family.subspan(1)) {
    require_same_space(family.front(), g);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (g[i] < out[i]) out[i] = g[i];
    }
  }
  return FnClass(family.front().space(), std::move(out));
}

FnClass pointwise_inf(const FnClass& f, const FnClass& g) {
  return zip(f, g, [](const ExtReal& a, const ExtReal& b) { return min(a, b); });
}

FnClass pointwise_sup(const FnClass& f, const FnClass& g) {
  return zip(f, g, [](const ExtReal& a, const ExtReal& b) { return max(a, b); });
}

std::pair<FnClass, FnClass> pos_neg_parts(const FnClass& f) {
  return {map(f, [](const ExtReal& v) { return pos_part(v); }), map(f, [](const ExtReal& v) { return neg_part(v); })};
}

FnClass negate(const FnClass& f) {
  return map(f, [](const ExtReal& v) { return neg(v); });
}

FnClass scale(const Scalar& lambda, const FnClass& f) {
  return map(f, [&](const ExtReal& v) { return scalar_mul(lambda, v); });
}

FnClass lower_sum(const FnClass& f, const FnClass& g) { return zip(f, g, lower_add); }
FnClass upper_sum(const FnClass& f, const FnClass& g) { return zip(f, g, upper_add); }

IntegrabilityTag classify(const FnClass& f) {
  auto [plus, minus] = pos_neg_parts(f);
  bool plus_finite = lebesgue_nonneg(plus).is_finite();
  bool minus_finite = lebesgue_nonneg(minus).is_finite();
  if (plus_finite && minus_finite) return IntegrabilityTag::kL1Full;
  if (plus_finite) return IntegrabilityTag::kL1Plus;
  if (minus_finite) return IntegrabilityTag::kL1Minus;
  return IntegrabilityTag::kL0Only;
}

bool is_nonnegative(const FnClass& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.measure_space().is_null_atom(i) && f[i].sign() < 0) return false;
  }
  return true;
}

LpNorm lp_norm(const FnClass& f, const Scalar& p) {
  if (p < Scalar(1)) throw DomainError("lp_norm needs p >= 1");
  Scalar sum;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Scalar& w = f.measure_space().weight(i);
    if (w.is_zero()) continue;
    if (!f[i].is_finite()) return {ExtReal::plus_inf(), true};
    sum += w * pow(abs(f[i].value()), p);
  }
  if (p == Scalar(1)) return {ExtReal(sum)};
  return {ExtReal(pow(sum, Scalar(1) / p))};
}

}  // namespace interlab
