#include "interlab/integrals.hpp"

#include <algorithm>

#include "interlab/error.hpp"

namespace interlab {

Capacity Capacity::table(SpacePtr space, std::vector<ExtReal> values) {
  const std::size_t n = space->size();
  if (n > kMaxTableAtoms) {
    throw InputError("capacity tables support at most " + std::to_string(kMaxTableAtoms) + " atoms");
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  if (values.size() != subsets) {
    throw InputError("capacity table needs " + std::to_string(subsets) + " entries, got " +
                     std::to_string(values.size()));
  }
  if (values[0] != ExtReal::zero()) throw InputError("capacity of the empty set must be 0");
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (values[mask].sign() < 0) throw InputError("capacity takes a negative value");
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t bigger = mask | (std::uint64_t{1} << i);
      if (values[bigger] < values[mask]) {
        throw InputError("capacity is not monotone: adding atom '" + space->atom(i) + "' decreases it");
      }
    }
  }
  return Capacity(std::move(space), std::move(values), std::nullopt);
}

Capacity Capacity::distortion(SpacePtr space, Scalar gamma) {
  if (gamma.sign() <= 0) throw InputError("distortion exponent must be positive");
  return Capacity(std::move(space), {}, std::move(gamma));
}

ExtReal Capacity::operator()(const AtomSet& s) const {
  if (s.universe_size() != space_->size()) throw InputError("atom set does not belong to the capacity's space");
  if (!gamma_) return table_[s.mask()];
  const Scalar& total = space_->total_mass();
  if (total.is_zero()) return ExtReal::zero();
  Scalar m = measure(*space_, s).value();
  if (*gamma_ == Scalar(1)) return ExtReal(m);
  return ExtReal(pow(m / total, *gamma_) * total);
}

ExtReal lebesgue_nonneg(const FnClass& f) {
  const MeasureSpace& space = f.measure_space();
  ExtReal total = ExtReal::zero();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (space.is_null_atom(i)) continue;
    if (f[i].sign() < 0) {
      throw DomainError("Lebesgue integral of a nonnegative function: negative value on atom '" + space.atom(i) + "'");
    }
    total = upper_add(total, scalar_mul(space.weight(i), f[i]));
  }
  return total;
}

ExtReal lebesgue_extended(const FnClass& f) {
  auto [plus, minus] = pos_neg_parts(f);
  ExtReal ip = lebesgue_nonneg(plus);
  ExtReal im = lebesgue_nonneg(minus);
  if (ip.is_plus_inf() && im.is_plus_inf()) {
    throw DomainError("function is not semi-integrable (both parts integrate to +inf); use the outer or inner integral");
  }
  return plain_add(ip, neg(im));
}

ExtReal outer_integral(const FnClass& f) {
  auto [plus, minus] = pos_neg_parts(f);
  return upper_add(lebesgue_nonneg(plus), neg(lebesgue_nonneg(minus)));
}

ExtReal inner_integral(const FnClass& f) {
  auto [plus, minus] = pos_neg_parts(f);
  return lower_add(lebesgue_nonneg(plus), neg(lebesgue_nonneg(minus)));
}

ExtReal choquet(const FnClass& f, const Capacity& c) {
  if (!same_space(f.space(), c.space())) throw InputError("capacity and function live on different spaces");
  const std::size_t n = f.size();
  std::vector<Scalar> levels{Scalar(0)};
  bool has_inf = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i].sign() < 0) {
      throw DomainError("Choquet integral needs a nonnegative function; atom '" + f.measure_space().atom(i) +
                        "' is negative");
    }
    if (f[i].is_plus_inf()) {
      has_inf = true;
    } else {
      levels.push_back(f[i].value());
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // On [levels[k-1], levels[k]) the super-level set {f > t} is {f >= levels[k]}.
  ExtReal total = ExtReal::zero();
  for (std::size_t k = 1; k < levels.size(); ++k) {
    AtomSet above(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (f[i].is_plus_inf() || f[i].value() >= levels[k]) above.insert(i);
    }
    total = upper_add(total, scalar_mul(levels[k] - levels[k - 1], c(above)));
  }
  if (has_inf) {
    AtomSet top(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (f[i].is_plus_inf()) top.insert(i);
    }
    if (c(top).sign() > 0) total = ExtReal::plus_inf();
  }
  return total;
}

ExtReal choquet_signed(const FnClass& f, const Capacity& c) {
  bool any_pos = false, any_neg = false;
  for (const auto& v : f.values()) {
    any_pos |= v.sign() > 0;
    any_neg |= v.sign() < 0;
  }
  if (any_pos && any_neg) throw DomainError("Choquet integral is only defined for functions of constant sign");
  if (any_neg) return neg(choquet(negate(f), c));
  return choquet(f, c);
}

FnClass finite_difference(const FnClass& x, const FnClass& y) {
  require_same_space(x, y);
  std::vector<ExtReal> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.measure_space().is_null_atom(i)) {
      out.push_back(ExtReal::zero());
      continue;
    }
    if (!x[i].is_finite() || !y[i].is_finite()) throw DomainError("difference of infinite values");
    out.push_back(ExtReal(x[i].value() - y[i].value()));
  }
  return FnClass(x.space(), std::move(out));
}

}  // namespace interlab
