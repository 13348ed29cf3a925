#include "interlab/decomposable.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "interlab/error.hpp"
#include "interlab/integrals.hpp"
#include "interlab/interchange.hpp"

namespace interlab {

Integrand::Integrand(SpacePtr space, std::vector<Control> controls, std::vector<std::vector<ExtReal>> table)
    : space_(std::move(space)), controls_(std::move(controls)), table_(std::move(table)) {
  if (!space_) throw InputError("integrand has no space");
  if (controls_.empty()) throw InputError("integrand needs at least one control");
  const std::size_t dim = controls_.front().size();
  std::set<Control> seen;
  for (const auto& c : controls_) {
    if (c.size() != dim) throw InputError("controls have mixed dimensions");
    if (!seen.insert(c).second) throw InputError("duplicate control");
  }
  if (table_.size() != space_->size()) {
    throw InputError("integrand table has " + std::to_string(table_.size()) + " rows for " +
                     std::to_string(space_->size()) + " atoms");
  }
  for (const auto& row : table_) {
    if (row.size() != controls_.size()) throw InputError("integrand row length differs from the control count");
  }
}

namespace {

void check_selection(const Selection& u, std::size_t atoms, std::size_t controls) {
  if (u.size() != atoms) throw InputError("selection length differs from the atom count");
  for (std::size_t j : u) {
    if (j >= controls) throw InputError("selection uses control index " + std::to_string(j) + " out of range");
  }
}

std::vector<std::vector<std::size_t>> projections_of(std::size_t atoms, const std::vector<Selection>& members) {
  std::vector<std::set<std::size_t>> sets(atoms);
  for (const auto& u : members) {
    for (std::size_t i = 0; i < atoms; ++i) sets[i].insert(u[i]);
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

}  // namespace

SelectionSet SelectionSet::explicit_set(std::size_t atoms, std::size_t controls, std::vector<Selection> members) {
  if (members.empty()) throw InputError("selection set is empty");
  for (const auto& u : members) check_selection(u, atoms, controls);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SelectionSet s;
  s.kind_ = Kind::kExplicit;
  s.atoms_ = atoms;
  s.controls_ = controls;
  s.projections_ = projections_of(atoms, members);
  s.members_ = std::move(members);
  return s;
}

SelectionSet SelectionSet::product(std::size_t controls, std::vector<std::vector<std::size_t>> admissible) {
  if (admissible.empty()) throw InputError("product selection set needs at least one atom");
  for (auto& a : admissible) {
    if (a.empty()) throw InputError("an atom has no admissible control");
    for (std::size_t j : a) {
      if (j >= controls) throw InputError("admissible control index out of range");
    }
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  SelectionSet s;
  s.kind_ = Kind::kProduct;
  s.atoms_ = admissible.size();
  s.controls_ = controls;
  s.projections_ = std::move(admissible);
  return s;
}

SelectionSet SelectionSet::full_product(std::size_t atoms, std::size_t controls) {
  std::vector<std::size_t> all(controls);
  for (std::size_t j = 0; j < controls; ++j) all[j] = j;
  return product(controls, std::vector<std::vector<std::size_t>>(atoms, all));
}

std::uint64_t SelectionSet::count() const {
  if (kind_ == Kind::kExplicit) return members_.size();
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  for (const auto& a : projections_) {
    if (n > kMax / a.size()) return kMax;
    n *= a.size();
  }
  return n;
}

bool SelectionSet::contains(const Selection& u) const {
  if (u.size() != atoms_) return false;
  if (kind_ == Kind::kExplicit) return std::binary_search(members_.begin(), members_.end(), u);
  for (std::size_t i = 0; i < atoms_; ++i) {
    if (!std::binary_search(projections_[i].begin(), projections_[i].end(), u[i])) return false;
  }
  return true;
}

bool SelectionSet::contains_ae(const Selection& u, const MeasureSpace& space) const {
  if (u.size() != atoms_) return false;
  if (kind_ == Kind::kProduct) {
    for (std::size_t i = 0; i < atoms_; ++i) {
      if (space.is_null_atom(i)) continue;
      if (!std::binary_search(projections_[i].begin(), projections_[i].end(), u[i])) return false;
    }
    return true;
  }
  return std::any_of(members_.begin(), members_.end(), [&](const Selection& m) {
    for (std::size_t i = 0; i < atoms_; ++i) {
      if (!space.is_null_atom(i) && m[i] != u[i]) return false;
    }
    return true;
  });
}

void SelectionSet::for_each(const std::function<bool(const Selection&)>& visit) const {
  if (kind_ == Kind::kExplicit) {
    for (const auto& u : members_) {
      if (!visit(u)) return;
    }
    return;
  }
  std::vector<std::size_t> digit(atoms_, 0);
  Selection u(atoms_);
  while (true) {
    for (std::size_t i = 0; i < atoms_; ++i) u[i] = projections_[i][digit[i]];
    if (!visit(u)) return;
    std::size_t i = atoms_;
    while (i > 0) {
      --i;
      if (++digit[i] < projections_[i].size()) break;
      digit[i] = 0;
      if (i == 0) return;
    }
  }
}

FnClass apply_G(const Integrand& f, const Selection& u) {
  check_selection(u, f.atoms(), f.control_count());
  std::vector<ExtReal> values;
  values.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) values.push_back(f(i, u[i]));
  return FnClass(f.space(), std::move(values));
}

FnClass pointwise_min_over_controls(const Integrand& f) {
  std::vector<ExtReal> values;
  for (const auto& row : f.table()) values.push_back(*std::min_element(row.begin(), row.end()));
  return FnClass(f.space(), std::move(values));
}

FnClass pointwise_min_over(const Integrand& f, const SelectionSet& U) {
  if (U.atoms() != f.atoms() || U.control_count() != f.control_count()) {
    throw InputError("selection set does not match the integrand shape");
  }
  std::vector<ExtReal> values;
  for (std::size_t i = 0; i < f.atoms(); ++i) {
    ExtReal best = ExtReal::plus_inf();
    for (std::size_t j : U.projections()[i]) best = min(best, f(i, j));
    values.push_back(best);
  }
  return FnClass(f.space(), std::move(values));
}

namespace {

constexpr std::size_t kMaxPatchAtoms = 20;

/// Every selection in the product of projections is in U (modulo null atoms).
bool equals_projection_product(const SelectionSet& U, const MeasureSpace& space) {
  if (U.kind() == SelectionSet::Kind::kProduct) return true;
  const SelectionSet prod = SelectionSet::product(U.control_count(), U.projections());
  bool all_in = true;
  prod.for_each([&](const Selection& u) {
    all_in = U.contains_ae(u, space);
    return all_in;
  });
  return all_in;
}

}  // namespace

DecomposableResult is_decomposable(const SelectionSet& U, const MeasureSpace& space) {
  if (U.atoms() != space.size()) throw InputError("selection set does not match the space");
  DecomposableResult result;
  if (U.kind() == SelectionSet::Kind::kProduct) return result;
  if (U.atoms() > kMaxPatchAtoms) {
    throw DomainError("patch scan limited to " + std::to_string(kMaxPatchAtoms) + " atoms");
  }
  const auto& members = U.members();
  const std::uint64_t masks = std::uint64_t{1} << U.atoms();
  for (std::size_t a = 0; a < members.size() && result.decomposable; ++a) {
    for (std::size_t b = 0; b < members.size() && result.decomposable; ++b) {
      if (a == b) continue;
      for (std::uint64_t m = 1; m + 1 < masks; ++m) {
        Selection patched = members[a];
        for (std::size_t i = 0; i < U.atoms(); ++i) {
          if ((m >> i) & 1U) patched[i] = members[b][i];
        }
        if (!U.contains_ae(patched, space)) {
          result.decomposable = false;
          result.witness = Patch{a, b, AtomSet::from_mask(U.atoms(), m), std::move(patched)};
          break;
        }
      }
    }
  }
  result.equals_projection_product = equals_projection_product(U, space);
  if (result.equals_projection_product != result.decomposable) {
    throw InvariantFailure("patch closure and projection-product test disagree on decomposability");
  }
  return result;
}

namespace {

void check_shape(const Integrand& f, const SelectionSet& U) {
  if (U.atoms() != f.atoms() || U.control_count() != f.control_count()) {
    throw InputError("selection set does not match the integrand shape");
  }
}

void check_budget(const SelectionSet& U, const RwOptions& options) {
  if (U.count() > options.enumeration_budget) {
    throw DomainError("selection set has more than " + std::to_string(options.enumeration_budget) +
                      " members; enumeration refused");
  }
}

}  // namespace

RwReport verify_rw_interchange(const Integrand& f, const SelectionSet& U, const RwOptions& options) {
  check_shape(f, U);
  check_budget(U, options);
  RwReport report;
  report.decomposable = is_decomposable(U, *f.space());

  const FnClass g_flat = pointwise_min_over(f, U);
  bool has_l1_plus = false;
  ExtReal best = ExtReal::plus_inf();
  U.for_each([&](const Selection& u) {
    ++report.selections;
    const FnClass g = apply_G(f, u);
    if (!report.invariant_failure && !pointwise_leq(g_flat, g)) {
      report.invariant_failure = "pointwise minimum is not below G(u)";
    }
    if (in_l1_plus(classify(g))) has_l1_plus = true;
    ExtReal value = outer_integral(g);
    if (report.minimizer.empty() || value < best) {
      best = value;
      report.minimizer = u;
    }
    return true;
  });
  if (!has_l1_plus) throw DomainError("no selection u has G(u) in L1+");

  report.lhs = best;
  report.rhs = outer_integral(g_flat);
  report.equal = approx_equal(report.lhs, report.rhs, options.tolerance);
  if (!approx_leq(report.rhs, report.lhs, options.tolerance)) {
    report.invariant_failure = "integral of the pointwise minimum exceeds the minimum over selections";
  }
  if (report.decomposable.decomposable) {
    report.verdict = report.equal ? "holds" : "fails";
    if (!report.equal && !report.invariant_failure) {
      report.invariant_failure = "decomposable selection set but lhs " + report.lhs.to_string() + " != rhs " +
                                 report.rhs.to_string();
    }
  } else {
    report.verdict = report.equal ? "hypothesis violated, equality" : "hypothesis violated, inequality strict";
    report.notes.push_back("selection set is not decomposable");
  }
  return report;
}

RwArgminReport verify_rw_argmin(const Integrand& f, const SelectionSet& U, const RwOptions& options) {
  RwReport rw = verify_rw_interchange(f, U, options);
  if (rw.invariant_failure) throw InvariantFailure(*rw.invariant_failure);
  RwArgminReport report;
  report.value = rw.lhs;
  if (rw.lhs.is_minus_inf()) {
    report.applicable = false;
    report.notes.push_back("characterization not applicable: the common value is -inf");
    return report;
  }
  if (!rw.equal) {
    report.applicable = false;
    report.notes.push_back("characterization not applicable: the interchange does not hold");
    return report;
  }
  const FnClass g_flat = pointwise_min_over(f, U);
  const MeasureSpace& space = *f.space();
  U.for_each([&](const Selection& u) {
    const bool in_argmin = approx_equal(outer_integral(apply_G(f, u)), rw.lhs, options.tolerance);
    bool pointwise = true;
    for (std::size_t i = 0; i < u.size() && pointwise; ++i) {
      if (!space.is_null_atom(i)) pointwise = f(i, u[i]) == g_flat[i];
    }
    if (in_argmin) ++report.argmin_count;
    if (in_argmin != pointwise) report.mismatches.push_back({u, in_argmin, pointwise});
    return true;
  });
  return report;
}

ShapiroReport verify_shapiro(const ShapiroScenario& sc) {
  const Integrand& f = sc.integrand;
  const SelectionSet& U = sc.selections;
  const RwOptions& opt = sc.options;
  check_shape(f, U);
  const MeasureSpace& space = *f.space();
  if (!space.is_probability()) throw InputError("Shapiro scenario needs a probability space");
  if (sc.p < Scalar(1)) throw InputError("exponent p must be at least 1");
  if (sc.sequence.empty()) throw InputError("Shapiro scenario needs a nonempty selection sequence");
  for (const auto& u : sc.sequence) {
    if (!U.contains(u)) throw InputError("sequence leaves the selection set");
  }

  ShapiroReport report;
  const FnClass computed_flat = pointwise_min_over(f, U);
  const FnClass g_flat = sc.declared_g_flat ? *sc.declared_g_flat : computed_flat;
  require_same_space(g_flat, computed_flat);
  if (sc.declared_g_flat && !(g_flat == computed_flat)) {
    report.notes.push_back("declared G flat differs from the per-atom minimum over admissible controls");
  }
  report.phi_g_flat = sc.phi(g_flat);

  auto finite_on_support = [&](const FnClass& g) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!space.is_null_atom(i) && !g[i].is_finite()) return false;
    }
    return true;
  };

  // (S1) and the conclusion, by enumeration when affordable.
  const bool enumerate = U.count() <= opt.enumeration_budget;
  report.inf_phi = ExtReal::plus_inf();
  if (enumerate) {
    U.for_each([&](const Selection& u) {
      const FnClass g = apply_G(f, u);
      if (!finite_on_support(g)) report.s1_finite = false;
      if (!sc.declared_g_flat && !report.invariant_failure && !pointwise_leq(g_flat, g)) {
        report.invariant_failure = "G flat is not below G(u)";
      }
      report.inf_phi = min(report.inf_phi, sc.phi(g));
      return true;
    });
  } else {
    report.sampled = true;
    report.notes.push_back("selection set exceeds the enumeration budget; using the sequence prefix only");
    for (const auto& u : sc.sequence) {
      const FnClass g = apply_G(f, u);
      if (!finite_on_support(g)) report.s1_finite = false;
      report.inf_phi = min(report.inf_phi, sc.phi(g));
    }
  }
  if (!finite_on_support(g_flat)) report.s1_finite = false;

  // (S2a) Lp convergence of G(u_n) to G flat along the prefix.
  for (const auto& u : sc.sequence) {
    const FnClass g = apply_G(f, u);
    if (finite_on_support(g) && finite_on_support(g_flat)) {
      report.norm_gaps.push_back(lp_norm(finite_difference(g, g_flat), sc.p).value);
    } else {
      report.norm_gaps.push_back(ExtReal::plus_inf());
    }
    report.phi_along_sequence.push_back(sc.phi(g));
  }
  report.s2a_norm_convergence = converges_to(report.norm_gaps, ExtReal::zero(), opt.tolerance);

  // (S2b) Phi(G flat) >= liminf Phi(G(u_n)), judged on the prefix.
  const auto& vals = report.phi_along_sequence;
  // The tail minimum bounds the liminf from below on the prefix; a
  // nonincreasing prefix may also approach the target at a steady rate.
  const std::size_t tail = vals.size() / 2;
  ExtReal tail_min = ExtReal::plus_inf();
  for (std::size_t n = tail; n < vals.size(); ++n) tail_min = min(tail_min, vals[n]);
  report.s2b_liminf = approx_leq(tail_min, report.phi_g_flat, opt.tolerance) ||
                      converges_to(vals, report.phi_g_flat, opt.tolerance);

  if (!report.s1_finite) report.failed_hypotheses.push_back("S1: G(u) is not finite-valued for every u");
  if (!report.s2a_norm_convergence) report.failed_hypotheses.push_back("S2a: G(u_n) does not converge to G flat in Lp");
  if (!report.s2b_liminf) report.failed_hypotheses.push_back("S2b: Phi(G flat) < liminf Phi(G(u_n))");

  if (report.sampled) {
    report.conclusion = approx_leq(report.inf_phi, report.phi_g_flat, opt.tolerance);
  } else {
    report.conclusion = approx_equal(report.inf_phi, report.phi_g_flat, opt.tolerance);
  }
  if (sc.phi.properties().order_preserving && !sc.declared_g_flat &&
      !approx_leq(report.phi_g_flat, report.inf_phi, opt.tolerance) && !report.invariant_failure) {
    report.invariant_failure = "Phi(G flat) exceeds inf Phi(G(u)) for an order-preserving Phi";
  }
  if (report.failed_hypotheses.empty() && !report.conclusion) {
    // The hypotheses are judged on a finite prefix, so this is a probe miss,
    // not a contradiction.
    report.notes.push_back("prefix checks pass but the conclusion fails; the prefix is too short to judge");
  }
  return report;
}

}  // namespace interlab
