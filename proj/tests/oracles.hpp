#pragma once

// Independent reference computations for the tests. They use GMP rationals
// and doubles directly, not the library's ExtReal arithmetic.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "interlab/fn_class.hpp"
#include "interlab/functional.hpp"
#include "interlab/integrals.hpp"
#include "interlab/interchange.hpp"

namespace oracle_ref {

/// An extended rational: -1 = -inf, +1 = +inf, 0 = finite `q`.
struct XQ {
  int inf = 0;
  mpq_class q = 0;
};

inline XQ to_xq(const interlab::ExtReal& v) {
  if (v.is_plus_inf()) return {1, 0};
  if (v.is_minus_inf()) return {-1, 0};
  return {0, v.value().exact()};
}

inline bool same(const XQ& a, const interlab::ExtReal& b) {
  XQ c = to_xq(b);
  return a.inf == c.inf && (a.inf != 0 || a.q == c.q);
}

/// Lebesgue integral of the nonnegative function max(sign * f, 0), as the
/// supremum over simple functions below it: on atoms the supremum is reached
/// by the truncations min(g, k), and an atom of positive weight where g is
/// +inf makes it unbounded.
inline XQ part_integral(const interlab::FnClass& f, int sign) {
  const auto& space = f.measure_space();
  mpq_class total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const mpq_class& w = space.weight(i).exact();
    if (w == 0) continue;
    XQ v = to_xq(f[i]);
    if (v.inf == sign) return {1, 0};
    if (v.inf != 0) continue;
    mpq_class g = sign > 0 ? v.q : mpq_class(-v.q);
    if (g > 0) total += w * g;
  }
  return {0, total};
}

/// upper_add(a, -b) for a, b >= 0.
inline XQ upper_diff(const XQ& a, const XQ& b) {
  if (a.inf == 1) return {1, 0};
  if (b.inf == 1) return {-1, 0};
  return {0, a.q - b.q};
}

/// lower_add(a, -b) for a, b >= 0.
inline XQ lower_diff(const XQ& a, const XQ& b) {
  if (b.inf == 1) return {-1, 0};
  if (a.inf == 1) return {1, 0};
  return {0, a.q - b.q};
}

/// Left-endpoint-free Riemann sum of t -> c({f > t}) over [0, max f] with
/// midpoints of cells of width h. Exact up to rounding when every value of f
/// is a multiple of h.
inline double choquet_riemann(const interlab::FnClass& f, const interlab::Capacity& c, double h) {
  std::vector<double> fv;
  for (const auto& v : f.values()) fv.push_back(v.to_double());
  double top = 0;
  for (double v : fv) top = std::max(top, v);
  const auto steps = static_cast<std::size_t>(top / h + 0.5);
  // c of each level set, looked up once per atom mask.
  std::vector<double> cache(std::size_t{1} << f.size(), -1.0);
  double sum = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = (static_cast<double>(k) + 0.5) * h;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (fv[i] > t) mask |= std::uint64_t{1} << i;
    }
    if (cache[mask] < 0) cache[mask] = c(interlab::AtomSet::from_mask(f.size(), mask)).to_double();
    sum += cache[mask];
  }
  return sum * h;
}

/// Greatest lower bound by enumeration: the largest vector over `grid` that
/// is below every member, found by scanning all grid vectors.
inline std::vector<interlab::ExtReal> glb_by_enumeration(const std::vector<interlab::FnClass>& family,
                                                         const std::vector<interlab::ExtReal>& grid) {
  const std::size_t n = family.front().size();
  std::vector<std::size_t> idx(n, 0);
  std::optional<std::vector<interlab::ExtReal>> best;
  while (true) {
    std::vector<interlab::ExtReal> cand;
    for (std::size_t i = 0; i < n; ++i) cand.push_back(grid[idx[i]]);
    bool below = true;
    for (const auto& f : family) {
      for (std::size_t i = 0; i < n && below; ++i) below = cand[i] <= f[i];
    }
    if (below) {
      bool dominates = true;
      if (best) {
        for (std::size_t i = 0; i < n && dominates; ++i) dominates = (*best)[i] <= cand[i];
      }
      if (dominates) best = cand;
    }
    std::size_t i = 0;
    while (i < n && ++idx[i] == grid.size()) idx[i++] = 0;
    if (i == n) break;
  }
  return *best;
}

/// Phi-inf-directedness by a plain bitmask scan over all nonempty subsets.
inline bool phi_directed_by_scan(const std::vector<interlab::FnClass>& family, const interlab::Functional& phi) {
  interlab::ExtReal inf_phi = interlab::ExtReal::plus_inf();
  for (const auto& x : family) inf_phi = std::min(inf_phi, phi(x));
  const std::uint64_t all = (std::uint64_t{1} << family.size()) - 1;
  for (std::uint64_t m = 1; m <= all; ++m) {
    std::vector<interlab::ExtReal> low(family.front().size(), interlab::ExtReal::plus_inf());
    for (std::size_t k = 0; k < family.size(); ++k) {
      if (!((m >> k) & 1U)) continue;
      for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], family[k][i]);
    }
    if (phi(interlab::FnClass(family.front().space(), low)) < inf_phi) return false;
  }
  return true;
}

}  // namespace oracle_ref
