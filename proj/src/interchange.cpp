#include "interlab/interchange.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "interlab/error.hpp"
#include "interlab/integrals.hpp"
#include "interlab/random.hpp"

namespace interlab {

Family::Family(std::vector<FnClass> m, Origin o) : members(std::move(m)), origin(o) {
  if (members.empty()) throw InputError("a family needs at least one member");
  for (const auto& f : members) require_same_space(members.front(), f);
}

FnClass Family::infimum_of(std::span<const std::size_t> indices) const {
  if (indices.empty()) throw InputError("infimum of an empty subfamily");
  std::vector<ExtReal> out = members.at(indices.front()).values();
  for (std::size_t idx : indices.subspan(1)) {
    const FnClass& g = members.at(idx);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (g[i] < out[i]) out[i] = g[i];
    }
  }
  return FnClass(space(), std::move(out));
}

FnClass Family::infimum() const { return pointwise_inf(members); }

InfDirectedResult is_inf_directed(const Family& family, bool mu_order) {
  auto leq = mu_order ? &mu_leq : &pointwise_leq;
  const std::size_t n = family.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool found = false;
      for (std::size_t k = 0; k < n && !found; ++k) {
        found = leq(family.members[k], family.members[i]) && leq(family.members[k], family.members[j]);
      }
      if (!found) return {false, std::make_pair(i, j)};
    }
  }
  return {};
}

std::string_view verdict_name(DirectedVerdict v) {
  switch (v) {
    case DirectedVerdict::kYes: return "yes";
    case DirectedVerdict::kNo: return "no";
    case DirectedVerdict::kDiverging: return "diverging";
    case DirectedVerdict::kUndetermined: return "undetermined";
  }
  return "?";
}

std::string_view verdict_name(InterchangeVerdict v) {
  switch (v) {
    case InterchangeVerdict::kHolds: return "holds";
    case InterchangeVerdict::kFails: return "fails";
    case InterchangeVerdict::kHoldsInLimit: return "holds-in-limit";
    case InterchangeVerdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<std::vector<std::size_t>> scan_subsets(std::size_t n, const DirectedOptions& options, bool* sampled) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  if (n <= options.subset_budget && n < 63) {
    if (sampled) *sampled = false;
    std::vector<std::uint64_t> masks(( std::uint64_t{1} << n) - 1);
    std::iota(masks.begin(), masks.end(), std::uint64_t{1});
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      if (pa != pb) return pa < pb;
      // Lexicographic on the sorted index lists: lower bits first.
      std::uint64_t diff = a ^ b;
      std::uint64_t lowest = diff & (~diff + 1);
      return (a & lowest) != 0;
    });
    out.reserve(masks.size());
    for (std::uint64_t m : masks) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if ((m >> i) & 1U) idx.push_back(i);
      }
      out.push_back(std::move(idx));
    }
    return out;
  }
  if (sampled) *sampled = true;
  std::set<std::vector<std::size_t>> seen;
  auto add = [&](std::vector<std::size_t> idx) {
    if (seen.insert(idx).second) out.push_back(std::move(idx));
  };
  for (std::size_t i = 0; i < n; ++i) add({i});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) add({i, j});
  }
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  add(all);
  Rng rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t s = 0; s < options.sampled_subsets; ++s) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.chance(1, 2)) idx.push_back(i);
    }
    if (!idx.empty()) add(std::move(idx));
  }
  return out;
}

namespace {

ExtReal inf_of_phi(const Family& family, const Functional& phi) {
  ExtReal best = ExtReal::plus_inf();
  for (const auto& x : family.members) best = min(best, phi(x));
  return best;
}

}  // namespace

PhiDirectedResult is_phi_inf_directed(const Family& family, const Functional& phi, const DirectedOptions& options) {
  PhiDirectedResult result;
  result.inf_phi = inf_of_phi(family, phi);

  std::vector<std::size_t> all(family.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  result.shortcut_holds = approx_leq(result.inf_phi, phi(family.infimum_of(all)), options.tolerance);

  bool scan_ok = true;
  for (const auto& subset : scan_subsets(family.size(), options, &result.sampled)) {
    ++result.subsets_checked;
    ExtReal value = phi(family.infimum_of(subset));
    if (scan_ok && !approx_leq(result.inf_phi, value, options.tolerance)) {
      scan_ok = false;
      result.witness = subset;
      result.witness_value = value;
    }
  }
  result.shortcut_agrees = scan_ok == result.shortcut_holds;
  if (!scan_ok) {
    result.verdict = DirectedVerdict::kNo;
  } else if (result.inf_phi.is_minus_inf()) {
    result.verdict = DirectedVerdict::kDiverging;
  } else {
    result.verdict = DirectedVerdict::kYes;
  }
  return result;
}

namespace {

void annotate_hypotheses(const Functional& phi, const SpacePtr& space, const InterchangeOptions& options,
                         InterchangeReport& report) {
  if (phi.properties().order_preserving) return;
  OrderCheckReport check = check_order_preserving(phi, space, options.order_check_trials, options.directed.seed);
  report.notes.push_back("functional '" + phi.name() + "' does not declare order preservation; sampled " +
                         std::to_string(check.trials) + " comparable pairs, " + std::to_string(check.violations) +
                         " violations; hypotheses were sample-checked only");
}

bool directed_positive(DirectedVerdict v) { return v == DirectedVerdict::kYes || v == DirectedVerdict::kDiverging; }

void cross_check(InterchangeReport& report) {
  const DirectedVerdict dv = report.phi_inf_directed.verdict;
  if (dv == DirectedVerdict::kUndetermined || report.interchange == InterchangeVerdict::kInconclusive) return;
  if (!report.phi_inf_directed.shortcut_agrees) {
    report.invariant_failure =
        "full-family shortcut and subset scan disagree; the functional is not order preserving on this family";
    return;
  }
  if (report.holds() != directed_positive(dv)) {
    report.invariant_failure = std::string("interchange verdict '") + std::string(verdict_name(report.interchange)) +
                               "' contradicts Phi-inf-directed verdict '" + std::string(verdict_name(dv)) + "'";
  }
}

}  // namespace

InterchangeReport verify_interchange(const Family& family, const Functional& phi, const InterchangeOptions& options) {
  InterchangeReport report;
  annotate_hypotheses(phi, family.space(), options, report);
  report.phi_inf_directed = is_phi_inf_directed(family, phi, options.directed);
  report.lhs = report.phi_inf_directed.inf_phi;
  report.rhs = phi(family.infimum());
  report.interchange = approx_equal(report.lhs, report.rhs, options.directed.tolerance) ? InterchangeVerdict::kHolds
                                                                                         : InterchangeVerdict::kFails;
  if (!approx_leq(report.rhs, report.lhs, options.directed.tolerance)) {
    report.invariant_failure = "Phi(inf X) = " + report.rhs.to_string() + " exceeds inf Phi(X) = " +
                               report.lhs.to_string() + "; the functional is not order preserving";
    return report;
  }
  if (report.phi_inf_directed.sampled) {
    report.notes.push_back("subset scan sampled " + std::to_string(report.phi_inf_directed.subsets_checked) +
                           " subsets of " + std::to_string(family.size()) + " members");
  }
  cross_check(report);
  return report;
}

// ---------------------------------------------------------------------------
// Sequences

SequenceSpec SequenceSpec::from_family(const Family& family) {
  SequenceSpec spec;
  spec.name = "cyclic family";
  spec.generator = [members = family.members](std::size_t n) { return members[n % members.size()]; };
  spec.prefix_len = 2 * family.size();
  return spec;
}

FnClass align_to(const FnClass& f, const SpacePtr& target, const ExtReal& fill) {
  if (same_space(f.space(), target)) return FnClass(target, f.values());
  const MeasureSpace& src = f.measure_space();
  std::vector<ExtReal> values(target->size(), fill);
  for (std::size_t i = 0; i < src.size(); ++i) {
    std::size_t j = target->index_of(src.atom(i));
    if (target->weight(j) != src.weight(i)) {
      throw InputError("atom '" + src.atom(i) + "' changes weight between truncations");
    }
    values[j] = f[i];
  }
  return FnClass(target, std::move(values));
}

std::string_view behavior_name(PrefixBehavior::Kind k) {
  switch (k) {
    case PrefixBehavior::Kind::kStable: return "stable";
    case PrefixBehavior::Kind::kDiverging: return "diverging";
    case PrefixBehavior::Kind::kMonotone: return "monotone";
    case PrefixBehavior::Kind::kInconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

bool nonincreasing(std::span<const ExtReal> values, const Scalar& tol) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!approx_leq(values[i], values[i - 1], tol)) return false;
  }
  return true;
}

}  // namespace

PrefixBehavior analyze_prefix(std::span<const ExtReal> values, const Scalar& threshold, const Scalar& tolerance) {
  if (values.empty()) throw InputError("empty prefix");
  const std::size_t n = values.size();
  const ExtReal& last = values.back();
  const bool monotone = nonincreasing(values, tolerance);
  if (last.is_minus_inf() && monotone) return {PrefixBehavior::Kind::kStable, last};

  if (n == 1) return {PrefixBehavior::Kind::kStable, last};
  // The second half of the prefix, and at least its last two entries.
  const std::size_t half_start = std::min(n / 2, n - 2);
  bool stable = true;
  for (std::size_t i = half_start; i < n && stable; ++i) stable = approx_equal(values[i], last, tolerance);
  if (stable) return {PrefixBehavior::Kind::kStable, last};
  if (!monotone) return {PrefixBehavior::Kind::kInconclusive, last};

  if (last.is_finite() && last.value() <= -threshold) return {PrefixBehavior::Kind::kDiverging, last};
  // Compare the drops over the last two quarters, past any early transient.
  const std::size_t q = std::max<std::size_t>(n >= 5 ? 2 : 1, (n - 1) / 4);
  if (n >= 4 && values[n - 1 - 2 * q].is_finite() && last.is_finite()) {
    const Scalar first_drop = values[n - 1 - 2 * q].value() - values[n - 1 - q].value();
    const Scalar second_drop = values[n - 1 - q].value() - last.value();
    if (second_drop.sign() > 0 && second_drop >= first_drop) return {PrefixBehavior::Kind::kDiverging, last};
  }
  return {PrefixBehavior::Kind::kMonotone, last};
}

bool converges_to(std::span<const ExtReal> values, const ExtReal& target, const Scalar& tolerance) {
  if (values.empty()) return false;
  if (!nonincreasing(values, tolerance)) return false;
  if (approx_leq(values.back(), target, tolerance)) return true;
  if (!target.is_finite() || values.size() < 8) return false;
  std::vector<Scalar> gaps;
  for (const auto& v : values) {
    if (!v.is_finite()) return false;
    gaps.push_back(v.value() - target.value());
  }
  const std::size_t last = gaps.size() - 1;
  const std::size_t mid = last / 2;
  const std::size_t quarter = last / 4;
  if (gaps[quarter].sign() <= 0 || gaps[mid].sign() <= 0) return false;
  const Scalar ratio = Scalar::ratio(3, 5);
  return gaps[last] <= ratio * gaps[mid] && gaps[mid] <= ratio * gaps[quarter];
}

namespace {

struct PrefixTrace {
  std::vector<FnClass> terms;        // aligned to the final space
  std::vector<FnClass> running_inf;  // aligned to the final space
  std::vector<ExtReal> phi_terms;
  std::vector<ExtReal> running_min;  // min_{k<=n} Phi(x_k)
  std::vector<ExtReal> phi_running_inf;
};

PrefixTrace trace_prefix(const SequenceSpec& seq, const Functional& phi) {
  if (seq.prefix_len == 0) throw InputError("sequence prefix must be at least 1");
  if (!seq.generator) throw InputError("sequence has no generator");
  std::vector<FnClass> raw;
  raw.reserve(seq.prefix_len);
  for (std::size_t n = 0; n < seq.prefix_len; ++n) raw.push_back(seq.generator(n));
  const SpacePtr final_space = raw.back().space();

  PrefixTrace t;
  for (std::size_t n = 0; n < raw.size(); ++n) {
    // Evaluate Phi on the term as generated (its own truncation).
    t.phi_terms.push_back(phi(raw[n]));
    t.running_min.push_back(n == 0 ? t.phi_terms.back() : min(t.running_min.back(), t.phi_terms.back()));
  }
  for (std::size_t n = 0; n < raw.size(); ++n) {
    t.terms.push_back(align_to(raw[n], final_space, seq.fill_value));
    t.running_inf.push_back(n == 0 ? t.terms.back() : pointwise_inf(t.running_inf.back(), t.terms.back()));
  }
  // Phi of x'_n on the truncation where x_n lives: x'_n restricted to the atoms
  // present at step n, so that growing truncations stay faithful.
  for (std::size_t n = 0; n < raw.size(); ++n) {
    const SpacePtr& sn = raw[n].space();
    std::vector<ExtReal> restricted;
    restricted.reserve(sn->size());
    for (std::size_t i = 0; i < sn->size(); ++i) {
      restricted.push_back(t.running_inf[n][final_space->index_of(sn->atom(i))]);
    }
    t.phi_running_inf.push_back(phi(FnClass(sn, std::move(restricted))));
  }
  return t;
}

/// Smallest prefix {0..k} whose infimum violates lhs <= Phi(x'_k).
std::vector<std::size_t> prefix_witness(const PrefixTrace& t, const ExtReal& lhs, const Scalar& tol, ExtReal* value) {
  for (std::size_t k = 0; k < t.phi_running_inf.size(); ++k) {
    if (!approx_leq(lhs, t.phi_running_inf[k], tol)) {
      std::vector<std::size_t> idx(k + 1);
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      *value = t.phi_running_inf[k];
      return idx;
    }
  }
  return {};
}

bool is_exact_kind(const PrefixBehavior& b) { return b.kind == PrefixBehavior::Kind::kStable; }

}  // namespace

InterchangeReport verify_interchange_sequence(const SequenceSpec& seq, const Functional& phi,
                                              const InterchangeOptions& options) {
  const Scalar& tol = options.directed.tolerance;
  PrefixTrace t = trace_prefix(seq, phi);
  InterchangeReport report;
  annotate_hypotheses(phi, t.terms.back().space(), options, report);

  PrefixBehavior lhs_b = analyze_prefix(t.running_min, seq.divergence_threshold, tol);
  PrefixBehavior rhs_b;
  if (seq.declared_limit) {
    const FnClass limit = align_to(*seq.declared_limit, t.terms.back().space(), seq.fill_value);
    rhs_b = {PrefixBehavior::Kind::kStable, phi(*seq.declared_limit)};
    if (!mu_leq(limit, t.running_inf.back())) {
      throw InputError("declared limit is not below the prefix infimum");
    }
    if (!(limit == t.running_inf.back())) {
      report.notes.push_back("hypothesis unverified: the declared limit is not attained by the prefix infimum");
    }
  } else {
    rhs_b = analyze_prefix(t.phi_running_inf, seq.divergence_threshold, tol);
  }

  report.lhs = lhs_b.kind == PrefixBehavior::Kind::kDiverging ? ExtReal::minus_inf() : lhs_b.value;
  report.rhs = rhs_b.kind == PrefixBehavior::Kind::kDiverging ? ExtReal::minus_inf() : rhs_b.value;
  report.prefix_lhs = t.running_min.back();
  report.prefix_rhs = rhs_b.value;
  report.lhs_diverging = lhs_b.kind == PrefixBehavior::Kind::kDiverging;
  report.rhs_diverging = rhs_b.kind == PrefixBehavior::Kind::kDiverging;
  report.notes.push_back("prefix " + std::to_string(seq.prefix_len) + ": lhs " + std::string(behavior_name(lhs_b.kind)) +
                         " at " + lhs_b.value.to_string() + ", rhs " + std::string(behavior_name(rhs_b.kind)) + " at " +
                         rhs_b.value.to_string());

  PhiDirectedResult& dir = report.phi_inf_directed;
  dir.inf_phi = report.lhs;
  dir.subsets_checked = t.phi_running_inf.size();
  dir.sampled = true;

  const bool lhs_neg_inf = report.lhs.is_minus_inf();
  const bool rhs_neg_inf = report.rhs.is_minus_inf();
  if (lhs_neg_inf && rhs_neg_inf) {
    report.interchange = (report.lhs_diverging || report.rhs_diverging) ? InterchangeVerdict::kHoldsInLimit
                                                                        : InterchangeVerdict::kHolds;
    dir.verdict = DirectedVerdict::kDiverging;
  } else if (is_exact_kind(lhs_b) && is_exact_kind(rhs_b)) {
    report.interchange =
        approx_equal(report.lhs, report.rhs, tol) ? InterchangeVerdict::kHolds : InterchangeVerdict::kFails;
    dir.witness = prefix_witness(t, report.lhs, tol, &dir.witness_value);
    if (dir.witness.empty() && !approx_leq(report.lhs, report.rhs, tol)) {
      dir.witness.resize(t.terms.size());
      std::iota(dir.witness.begin(), dir.witness.end(), std::size_t{0});
      dir.witness_value = report.rhs;
    }
    dir.verdict = dir.witness.empty() ? DirectedVerdict::kYes : DirectedVerdict::kNo;
  } else if (is_exact_kind(lhs_b) && report.lhs.is_finite() &&
             !approx_leq(report.lhs, t.phi_running_inf.back(), tol)) {
    // rhs <= Phi(x'_N) < lhs, whatever the rest of the sequence does.
    report.interchange = InterchangeVerdict::kFails;
    dir.witness = prefix_witness(t, report.lhs, tol, &dir.witness_value);
    dir.verdict = DirectedVerdict::kNo;
  } else if (lhs_b.kind == PrefixBehavior::Kind::kMonotone && is_exact_kind(rhs_b) &&
             converges_to(t.running_min, report.rhs, tol)) {
    report.interchange = InterchangeVerdict::kHoldsInLimit;
    report.lhs = report.rhs;
    dir.inf_phi = report.lhs;
    dir.verdict = DirectedVerdict::kYes;
  } else {
    report.interchange = InterchangeVerdict::kInconclusive;
    dir.verdict = DirectedVerdict::kUndetermined;
  }

  if (!approx_leq(t.phi_running_inf.back(), t.running_min.back(), tol)) {
    report.invariant_failure = "Phi of the prefix infimum exceeds the prefix minimum of Phi; the functional is not "
                               "order preserving";
    return report;
  }
  cross_check(report);
  return report;
}

std::string_view verdict_name(SeqContinuityReport::Verdict v) {
  switch (v) {
    case SeqContinuityReport::Verdict::kHolds: return "holds";
    case SeqContinuityReport::Verdict::kFails: return "fails";
    case SeqContinuityReport::Verdict::kInconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view basis_name(SeqContinuityReport::Basis b) {
  switch (b) {
    case SeqContinuityReport::Basis::kExact: return "exact";
    case SeqContinuityReport::Basis::kLimit: return "limit";
    case SeqContinuityReport::Basis::kDivergence: return "divergence";
  }
  return "?";
}

SeqContinuityReport check_seq_inf_continuity(const Functional& phi, const SequenceSpec& seq, const Scalar& tolerance) {
  if (seq.prefix_len == 0) throw InputError("sequence prefix must be at least 1");
  std::vector<FnClass> terms;
  for (std::size_t n = 0; n < seq.prefix_len; ++n) terms.push_back(seq.generator(n));
  const SpacePtr space = terms.back().space();
  for (auto& x : terms) x = align_to(x, space, seq.fill_value);
  for (std::size_t n = 1; n < terms.size(); ++n) {
    if (!mu_leq(terms[n], terms[n - 1])) {
      throw InputError("sequence prefix is not nonincreasing at index " + std::to_string(n));
    }
  }
  FnClass limit = seq.declared_limit ? align_to(*seq.declared_limit, space, seq.fill_value) : terms.back();
  if (seq.declared_limit) {
    for (std::size_t n = 0; n < terms.size(); ++n) {
      if (!mu_leq(limit, terms[n])) {
        throw InputError("declared limit is not below term " + std::to_string(n));
      }
    }
  }

  SeqContinuityReport report;
  std::vector<ExtReal> values;
  for (const auto& x : terms) values.push_back(phi(x));
  std::vector<ExtReal> running(values.size());
  for (std::size_t n = 0; n < values.size(); ++n) running[n] = n == 0 ? values[0] : min(running[n - 1], values[n]);
  report.lhs = running.back();
  report.rhs = phi(limit);
  report.lhs_behavior = analyze_prefix(running, seq.divergence_threshold, tolerance);

  using V = SeqContinuityReport::Verdict;
  using B = SeqContinuityReport::Basis;
  if (approx_leq(report.lhs, report.rhs, tolerance)) {
    report.verdict = V::kHolds;
    report.basis = B::kExact;
  } else if (report.rhs.is_minus_inf()) {
    if (report.lhs_behavior.kind == PrefixBehavior::Kind::kDiverging) {
      report.verdict = V::kHolds;
      report.basis = B::kDivergence;
      report.lhs = ExtReal::minus_inf();
    } else {
      report.verdict = V::kInconclusive;
      report.notes.push_back("Phi(limit) = -inf but the prefix shows no divergence");
    }
  } else if (converges_to(running, report.rhs, tolerance)) {
    report.verdict = V::kHolds;
    report.basis = B::kLimit;
    report.notes.push_back("prefix gap " + report.lhs.to_string() + " vs " + report.rhs.to_string() +
                           " decays toward zero");
  } else if (report.lhs_behavior.kind == PrefixBehavior::Kind::kStable) {
    report.verdict = V::kFails;
    report.basis = B::kExact;
  } else {
    report.verdict = V::kInconclusive;
  }
  return report;
}

GapDirectedResult is_gap_inf_directed(const Family& family, const DirectedOptions& options) {
  GapDirectedResult result;
  const MeasureSpace& space = *family.space();
  for (const auto& x : family.members) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!space.is_null_atom(i) && !x[i].is_finite()) {
        result.applicable = false;
        return result;
      }
    }
  }
  for (const auto& subset : scan_subsets(family.size(), options, nullptr)) {
    const FnClass low = family.infimum_of(subset);
    ExtReal best = ExtReal::plus_inf();
    for (const auto& x : family.members) best = min(best, lebesgue_extended(finite_difference(x, low)));
    if (!approx_leq(best, ExtReal::zero(), options.tolerance)) {
      result.directed = false;
      result.witness = subset;
      result.witness_gap = best;
      return result;
    }
  }
  return result;
}

}  // namespace interlab
