#include "interlab/oracle.hpp"

#include <algorithm>

#include "interlab/error.hpp"
#include "interlab/random.hpp"

namespace interlab::oracle {

std::string_view kind_name(FunctionalKind k) {
  switch (k) {
    case FunctionalKind::kExtendedLebesgue: return "extended_lebesgue";
    case FunctionalKind::kChoquet: return "choquet";
    case FunctionalKind::kEssSup: return "ess_sup";
  }
  return "?";
}

Family Instance::family() const {
  std::vector<FnClass> fs;
  for (const auto& row : members) fs.emplace_back(space, row);
  return Family(std::move(fs), Family::Origin::kGenerated);
}

FunctionalSpec Instance::spec() const {
  FunctionalSpec s;
  switch (kind) {
    case FunctionalKind::kExtendedLebesgue: s.kind = BuiltinKind::kExtendedLebesgue; break;
    case FunctionalKind::kChoquet:
      s.kind = BuiltinKind::kChoquet;
      s.capacity = capacity;
      break;
    case FunctionalKind::kEssSup: s.kind = BuiltinKind::kEssSup; break;
  }
  return s;
}

Functional Instance::functional() const { return make_builtin(spec()); }

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ValueDomain domain_for(FunctionalKind k) {
  switch (k) {
    case FunctionalKind::kExtendedLebesgue: return ValueDomain::kL1Plus;
    case FunctionalKind::kChoquet: return ValueDomain::kNonnegative;
    case FunctionalKind::kEssSup: return ValueDomain::kAll;
  }
  return ValueDomain::kAll;
}

}  // namespace

Instance random_instance(std::uint64_t seed, std::size_t trial, const CampaignOptions& options) {
  Rng rng(mix(seed ^ mix(trial)));
  Instance inst;
  inst.kind = options.only ? *options.only : static_cast<FunctionalKind>(rng.below(3));
  inst.space = random_space(rng, 1 + rng.below(std::max<std::size_t>(options.max_atoms, 1)));
  if (inst.kind == FunctionalKind::kChoquet) inst.capacity = random_capacity(rng, inst.space);
  const ValueDomain d = domain_for(inst.kind);
  const std::vector<ExtReal> grid = options.finite_values ? finite_value_grid() : value_grid();
  const std::size_t size = 1 + rng.below(std::max<std::size_t>(options.max_family, 1));
  std::vector<FnClass> fs;
  for (std::size_t k = 0; k < size; ++k) {
    // Sometimes add a common lower bound of two earlier members, so that
    // directed families are well represented.
    if (k >= 2 && rng.chance(1, 3)) {
      const FnClass& a = fs[rng.below(k)];
      const FnClass& b = fs[rng.below(k)];
      FnClass low = pointwise_inf(a, b);
      if (in_value_domain(low, d)) {
        fs.push_back(std::move(low));
        continue;
      }
    }
    fs.push_back(random_fn(rng, inst.space, d, grid));
  }
  for (const auto& f : fs) inst.members.push_back(f.values());
  return inst;
}

std::optional<std::string> equivalence_check(const Instance& inst, const InterchangeOptions& options) {
  const Family family = inst.family();
  const Functional phi = inst.functional();
  const InterchangeReport r = verify_interchange(family, phi, options);
  if (r.invariant_failure) return *r.invariant_failure;
  const bool directed = r.phi_inf_directed.verdict == DirectedVerdict::kYes ||
                        r.phi_inf_directed.verdict == DirectedVerdict::kDiverging;
  if (r.holds() != directed) return std::string("interchange and Phi-inf-directed verdicts disagree");
  if (is_inf_directed(family, phi.properties().null_invariant).directed && !directed) return std::string("inf-directed family is not Phi-inf-directed");
  const InterchangeReport seq = verify_interchange_sequence(SequenceSpec::from_family(family), phi, options);
  if (seq.invariant_failure) return "sequence path: " + *seq.invariant_failure;
  if (seq.holds() != r.holds() || !(seq.lhs == r.lhs) || !(seq.rhs == r.rhs)) {
    return std::string("sequence path disagrees with the finite-family verdict");
  }
  return std::nullopt;
}

namespace {

bool still_fails(const Instance& inst, const Check& check) {
  try {
    return check(inst).has_value();
  } catch (const std::exception&) {
    return false;
  }
}

int complexity(const ExtReal& v) {
  if (!v.is_finite()) return 4;
  if (v.value().is_zero()) return 0;
  if (abs(v.value()) == Scalar(1)) return 1;
  if (v.value().is_integer()) return 2;
  return 3;
}

std::optional<Instance> drop_atom(const Instance& inst, std::size_t atom) {
  const MeasureSpace& s = *inst.space;
  if (s.size() <= 1) return std::nullopt;
  std::vector<std::string> atoms;
  std::vector<Scalar> weights;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i == atom) continue;
    atoms.push_back(s.atom(i));
    weights.push_back(s.weight(i));
  }
  if (std::all_of(weights.begin(), weights.end(), [](const Scalar& w) { return w.is_zero(); })) return std::nullopt;
  Instance out = inst;
  out.space = std::make_shared<const MeasureSpace>(std::move(atoms), std::move(weights), s.truncation_of());
  for (auto& row : out.members) row.erase(row.begin() + static_cast<std::ptrdiff_t>(atom));
  if (inst.capacity) {
    if (!inst.capacity->is_table()) {
      out.capacity = Capacity::distortion(out.space, *inst.capacity->gamma());
    } else {
      const std::size_t n = out.space->size();
      std::vector<ExtReal> table(std::size_t{1} << n);
      const std::uint64_t low = (std::uint64_t{1} << atom) - 1;
      for (std::uint64_t m = 0; m < table.size(); ++m) {
        const std::uint64_t wide = (m & low) | ((m & ~low) << 1);
        table[m] = inst.capacity->table_values()[wide];
      }
      out.capacity = Capacity::table(out.space, std::move(table));
    }
  }
  return out;
}

std::optional<Instance> set_weight(const Instance& inst, std::size_t atom, const Scalar& w) {
  const MeasureSpace& s = *inst.space;
  if (s.weight(atom) == w) return std::nullopt;
  std::vector<Scalar> weights = s.weights();
  weights[atom] = w;
  if (std::all_of(weights.begin(), weights.end(), [](const Scalar& x) { return x.is_zero(); })) return std::nullopt;
  Instance out = inst;
  out.space = std::make_shared<const MeasureSpace>(s.atoms(), std::move(weights), s.truncation_of());
  if (inst.capacity) {
    out.capacity = inst.capacity->is_table() ? Capacity::table(out.space, inst.capacity->table_values())
                                             : Capacity::distortion(out.space, *inst.capacity->gamma());
  }
  return out;
}

}  // namespace

Instance shrink(const Instance& failing, const Check& check) {
  Instance cur = failing;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; k < cur.members.size() && cur.members.size() > 1; ++k) {
      Instance cand = cur;
      cand.members.erase(cand.members.begin() + static_cast<std::ptrdiff_t>(k));
      if (still_fails(cand, check)) {
        cur = std::move(cand);
        progress = true;
        --k;
      }
    }
    for (std::size_t i = 0; i < cur.space->size(); ++i) {
      auto cand = drop_atom(cur, i);
      if (cand && still_fails(*cand, check)) {
        cur = std::move(*cand);
        progress = true;
        --i;
      }
    }
    for (std::size_t i = 0; i < cur.space->size(); ++i) {
      auto cand = set_weight(cur, i, Scalar(1));
      if (cand && still_fails(*cand, check)) {
        cur = std::move(*cand);
        progress = true;
      }
    }
    static const std::vector<ExtReal> simpler{ExtReal(0), ExtReal(1), ExtReal(-1), ExtReal(2), ExtReal(-2)};
    for (std::size_t k = 0; k < cur.members.size(); ++k) {
      for (std::size_t i = 0; i < cur.members[k].size(); ++i) {
        for (const auto& v : simpler) {
          if (complexity(v) >= complexity(cur.members[k][i])) continue;
          Instance cand = cur;
          cand.members[k][i] = v;
          if (still_fails(cand, check)) {
            cur = std::move(cand);
            progress = true;
            break;
          }
        }
      }
    }
  }
  return cur;
}

CampaignSummary run_campaign(const CampaignOptions& options, const Check& check) {
  InterchangeOptions io_opts;
  io_opts.directed.subset_budget = options.subset_budget;
  io_opts.directed.seed = options.seed;
  io_opts.directed.tolerance =
      options.tolerance ? *options.tolerance : (backing() == Backing::kFloat ? Scalar::parse("1e-9") : Scalar(0));
  const Check effective = check ? check : Check([io_opts](const Instance& inst) {
    return equivalence_check(inst, io_opts);
  });

  CampaignSummary summary;
  for (std::size_t t = 0; t < options.trials; ++t) {
    Instance inst = random_instance(options.seed, t, options);
    ++summary.trials;
    ++summary.per_kind[static_cast<std::size_t>(inst.kind)];
    std::optional<std::string> failure;
    try {
      failure = effective(inst);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure) {
      summary.violations.push_back({t, *failure, shrink(inst, effective)});
      continue;
    }
    const InterchangeReport r = verify_interchange(inst.family(), inst.functional(), io_opts);
    (r.holds() ? summary.holds : summary.fails) += 1;
    switch (r.phi_inf_directed.verdict) {
      case DirectedVerdict::kYes: ++summary.directed_yes; break;
      case DirectedVerdict::kNo: ++summary.directed_no; break;
      case DirectedVerdict::kDiverging: ++summary.directed_diverging; break;
      case DirectedVerdict::kUndetermined: break;
    }
    if (is_inf_directed(inst.family(), inst.kind != FunctionalKind::kChoquet).directed) ++summary.inf_directed;
  }
  return summary;
}

io::Json scenario_json(const Instance& inst, const CampaignOptions& options) {
  io::RunOptions ro;
  ro.subset_budget = options.subset_budget;
  ro.seed = options.seed;
  ro.tolerance = options.tolerance;
  return io::scenario_to_json(*inst.space, inst.family(), inst.spec(), ro);
}

io::Json to_json(const CampaignSummary& s, const CampaignOptions& options) {
  io::Json j;
  j["trials"] = s.trials;
  j["seed"] = options.seed;
  j["max_atoms"] = options.max_atoms;
  j["max_family"] = options.max_family;
  io::Json kinds;
  for (std::size_t k = 0; k < s.per_kind.size(); ++k) {
    kinds[std::string(kind_name(static_cast<FunctionalKind>(k)))] = s.per_kind[k];
  }
  j["instances_by_functional"] = kinds;
  j["interchange_holds"] = s.holds;
  j["interchange_fails"] = s.fails;
  j["phi_inf_directed"] = {{"yes", s.directed_yes}, {"no", s.directed_no}, {"diverging", s.directed_diverging}};
  j["inf_directed"] = s.inf_directed;
  io::Json v = io::Json::array();
  for (const auto& viol : s.violations) {
    v.push_back({{"trial", viol.trial}, {"message", viol.message}, {"minimal_scenario", scenario_json(viol.minimal, options)}});
  }
  j["violations"] = v;
  j["violation_count"] = s.violations.size();
  return j;
}

}  // namespace interlab::oracle
