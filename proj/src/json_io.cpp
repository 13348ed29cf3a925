#include "interlab/json_io.hpp"

#include <charconv>
#include <climits>
#include <set>

#include "interlab/error.hpp"

namespace interlab::io {

namespace {

std::string shortest(double d) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, ptr);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::size_t count_from(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw InputError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known, const char* what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw InputError(std::string("unknown field '") + it.key() + "' in " + what);
  }
}

std::vector<std::size_t> index_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of indices");
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(count_from(v, what));
  return out;
}

std::string set_key(const MeasureSpace& space, std::uint64_t mask) {
  std::string key = "{";
  bool first = true;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (!((mask >> i) & 1U)) continue;
    if (!first) key += ",";
    key += space.atom(i);
    first = false;
  }
  return key + "}";
}

AtomSet parse_set_key(const MeasureSpace& space, const std::string& key) {
  if (key.size() < 2 || key.front() != '{' || key.back() != '}') {
    throw InputError("capacity key '" + key + "' must look like {a,b}");
  }
  std::vector<std::string> ids;
  std::string cur;
  auto flush = [&] {
    auto b = cur.find_first_not_of(' ');
    auto e = cur.find_last_not_of(' ');
    if (b != std::string::npos) ids.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (std::size_t i = 1; i + 1 < key.size(); ++i) {
    if (key[i] == ',') {
      flush();
    } else {
      cur += key[i];
    }
  }
  flush();
  return AtomSet::of(space, ids);
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Scalar scalar_from(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(LLONG_MAX)) {
      return Scalar::parse(std::to_string(j.get<std::uint64_t>()));
    }
    return Scalar(j.get<long long>());
  }
  if (j.is_number_float()) return Scalar::parse(shortest(j.get<double>()));
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw InputError("expected a number, got " + j.dump());
}

ExtReal ext_from(const Json& j) {
  if (j.is_string()) return ExtReal::parse(j.get<std::string>());
  return ExtReal(scalar_from(j));
}

SpacePtr space_from(const Json& j) {
  if (!j.is_object()) throw InputError("space must be an object");
  reject_unknown(j, {"atoms", "weights", "truncation_of"}, "space");
  const Json& w = field(j, "weights");
  if (!w.is_array()) throw InputError("space weights must be an array");
  std::vector<Scalar> weights;
  for (const auto& v : w) weights.push_back(scalar_from(v));
  std::optional<std::string> trunc;
  if (j.contains("truncation_of")) trunc = string_field(j, "truncation_of");
  if (!j.contains("atoms")) return MeasureSpace::make(std::move(weights), trunc);
  const Json& a = j["atoms"];
  if (!a.is_array()) throw InputError("space atoms must be an array");
  std::vector<std::string> atoms;
  for (const auto& v : a) {
    if (!v.is_string()) throw InputError("atom ids must be strings");
    atoms.push_back(v.get<std::string>());
  }
  return std::make_shared<const MeasureSpace>(std::move(atoms), std::move(weights), trunc);
}

FnClass fn_from(const Json& j, const SpacePtr& space) {
  std::vector<ExtReal> values;
  if (j.is_array()) {
    if (j.size() != space->size()) {
      throw InputError("function has " + std::to_string(j.size()) + " values for " + std::to_string(space->size()) +
                       " atoms");
    }
    for (const auto& v : j) values.push_back(ext_from(v));
  } else if (j.is_object()) {
    values.resize(space->size());
    std::vector<bool> seen(space->size(), false);
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::size_t i = space->index_of(it.key());
      values[i] = ext_from(it.value());
      seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (!seen[i]) throw InputError("function has no value on atom '" + space->atom(i) + "'");
    }
  } else {
    throw InputError("a function must be an array or an object keyed by atom");
  }
  return FnClass(space, std::move(values));
}

Capacity capacity_from(const Json& j, const SpacePtr& space) {
  const std::string kind = string_field(j, "kind");
  if (kind == "measure") return Capacity::of_measure(space);
  if (kind == "distortion") return Capacity::distortion(space, scalar_from(field(j, "gamma")));
  if (kind != "table") throw InputError("unknown capacity kind '" + kind + "'");
  if (space->size() > Capacity::kMaxTableAtoms) throw InputError("capacity table too large");
  const std::size_t n = std::size_t{1} << space->size();
  const Json& v = field(j, "values");
  std::vector<ExtReal> table(n);
  if (v.is_array()) {
    if (v.size() != n) throw InputError("capacity table needs " + std::to_string(n) + " entries");
    for (std::size_t m = 0; m < n; ++m) table[m] = ext_from(v[m]);
    return Capacity::table(space, std::move(table));
  }
  if (!v.is_object()) throw InputError("capacity values must be an object or an array");
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (auto it = v.begin(); it != v.end(); ++it) {
    std::uint64_t m = parse_set_key(*space, it.key()).mask();
    table[m] = ext_from(it.value());
    seen[m] = true;
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (!seen[m]) throw InputError("capacity table has no value for " + set_key(*space, m));
  }
  return Capacity::table(space, std::move(table));
}

ScalarMap map_from(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind == "affine") {
    return ScalarMap::affine(j.contains("scale") ? scalar_from(j["scale"]) : Scalar(1),
                             j.contains("shift") ? scalar_from(j["shift"]) : Scalar(0));
  }
  if (kind == "clamp") return ScalarMap::clamp(ext_from(field(j, "lo")), ext_from(field(j, "hi")));
  if (kind == "step") return ScalarMap::step(ext_from(field(j, "threshold")));
  throw InputError("unknown map kind '" + kind + "'");
}

FunctionalSpec functional_spec_from(const Json& j, const SpacePtr& space) {
  FunctionalSpec spec;
  const std::string kind = j.is_string() ? j.get<std::string>() : string_field(j, "kind");
  if (kind == "extended_lebesgue") {
    spec.kind = BuiltinKind::kExtendedLebesgue;
  } else if (kind == "outer") {
    spec.kind = BuiltinKind::kOuter;
  } else if (kind == "inner") {
    spec.kind = BuiltinKind::kInner;
  } else if (kind == "ess_sup") {
    spec.kind = BuiltinKind::kEssSup;
  } else if (kind == "choquet") {
    spec.kind = BuiltinKind::kChoquet;
    if (!space) throw InputError("a Choquet functional needs a scenario space");
    spec.capacity = capacity_from(field(j, "capacity"), space);
  } else if (kind == "post_compose") {
    spec.kind = BuiltinKind::kPostCompose;
    spec.inner = std::make_shared<FunctionalSpec>(functional_spec_from(field(j, "of"), space));
    spec.map = map_from(field(j, "map"));
  } else {
    throw InputError("unknown functional kind '" + kind + "'");
  }
  return spec;
}

Integrand integrand_from(const Json& j, const SpacePtr& space) {
  const Json& c = field(j, "controls");
  if (!c.is_array()) throw InputError("controls must be an array");
  std::vector<Control> controls;
  for (const auto& point : c) {
    Control ctl;
    if (point.is_array()) {
      for (const auto& x : point) ctl.push_back(scalar_from(x));
    } else {
      ctl.push_back(scalar_from(point));
    }
    controls.push_back(std::move(ctl));
  }
  const Json& t = field(j, "table");
  if (!t.is_array()) throw InputError("integrand table must be an array of rows");
  std::vector<std::vector<ExtReal>> table;
  for (const auto& row : t) {
    if (!row.is_array()) throw InputError("integrand rows must be arrays");
    std::vector<ExtReal> r;
    for (const auto& v : row) r.push_back(ext_from(v));
    table.push_back(std::move(r));
  }
  return Integrand(space, std::move(controls), std::move(table));
}

SelectionSet selections_from(const Json& j, const Integrand& f) {
  const std::string kind = string_field(j, "kind");
  if (kind == "full") return SelectionSet::full_product(f.atoms(), f.control_count());
  if (kind == "product") {
    const Json& a = field(j, "admissible");
    if (!a.is_array()) throw InputError("admissible must be an array per atom");
    std::vector<std::vector<std::size_t>> adm;
    for (const auto& row : a) adm.push_back(index_list(row, "admissible control"));
    if (adm.size() != f.atoms()) throw InputError("admissible sets do not match the atom count");
    return SelectionSet::product(f.control_count(), std::move(adm));
  }
  if (kind == "explicit") {
    const Json& m = field(j, "members");
    if (!m.is_array()) throw InputError("members must be an array of selections");
    std::vector<Selection> members;
    for (const auto& u : m) members.push_back(index_list(u, "selection"));
    return SelectionSet::explicit_set(f.atoms(), f.control_count(), std::move(members));
  }
  throw InputError("unknown selection set kind '" + kind + "'");
}

// ---------------------------------------------------------------------------

Json to_json(const Scalar& s) {
  if (!s.is_exact()) return s.to_double();
  if (s.is_integer() && s.exact().get_num().fits_slong_p()) return s.exact().get_num().get_si();
  const double d = s.to_double();
  if (Scalar::parse(shortest(d)) == s) return d;
  return s.to_string();
}

Json to_json(const ExtReal& x) {
  if (x.is_finite()) return to_json(x.value());
  return x.to_string();
}

Json to_json(const MeasureSpace& space) {
  Json j;
  j["atoms"] = space.atoms();
  Json w = Json::array();
  for (const auto& s : space.weights()) w.push_back(to_json(s));
  j["weights"] = w;
  if (space.truncation_of()) j["truncation_of"] = *space.truncation_of();
  return j;
}

Json to_json(const FnClass& f) {
  Json j = Json::array();
  for (const auto& v : f.values()) j.push_back(to_json(v));
  return j;
}

Json to_json(const Capacity& c) {
  Json j;
  if (!c.is_table()) {
    j["kind"] = "distortion";
    j["gamma"] = to_json(*c.gamma());
    return j;
  }
  j["kind"] = "table";
  Json values = Json::object();
  const auto& table = c.table_values();
  for (std::size_t m = 1; m < table.size(); ++m) values[set_key(*c.space(), m)] = to_json(table[m]);
  j["values"] = values;
  return j;
}

Json to_json(const ScalarMap& g) {
  Json j;
  j["kind"] = g.kind.empty() ? g.name : g.kind;
  if (g.kind == "affine") {
    j["scale"] = to_json(g.params.at(0));
    j["shift"] = to_json(g.params.at(1));
  } else if (g.kind == "clamp") {
    j["lo"] = to_json(g.params.at(0));
    j["hi"] = to_json(g.params.at(1));
  } else if (g.kind == "step") {
    j["threshold"] = to_json(g.params.at(0));
  }
  return j;
}

Json to_json(const FunctionalSpec& spec) {
  Json j;
  switch (spec.kind) {
    case BuiltinKind::kExtendedLebesgue: j["kind"] = "extended_lebesgue"; break;
    case BuiltinKind::kOuter: j["kind"] = "outer"; break;
    case BuiltinKind::kInner: j["kind"] = "inner"; break;
    case BuiltinKind::kEssSup: j["kind"] = "ess_sup"; break;
    case BuiltinKind::kChoquet:
      j["kind"] = "choquet";
      j["capacity"] = to_json(spec.capacity.value());
      break;
    case BuiltinKind::kPostCompose:
      j["kind"] = "post_compose";
      j["of"] = to_json(*spec.inner);
      j["map"] = to_json(spec.map.value());
      break;
  }
  return j;
}

Json to_json(const Integrand& f) {
  Json j;
  Json controls = Json::array();
  for (const auto& c : f.controls()) {
    Json point = Json::array();
    for (const auto& x : c) point.push_back(to_json(x));
    controls.push_back(point);
  }
  j["controls"] = controls;
  Json table = Json::array();
  for (const auto& row : f.table()) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    table.push_back(r);
  }
  j["table"] = table;
  return j;
}

Json to_json(const SelectionSet& U) {
  Json j;
  if (U.kind() == SelectionSet::Kind::kProduct) {
    j["kind"] = "product";
    j["admissible"] = U.projections();
  } else {
    j["kind"] = "explicit";
    j["members"] = U.members();
  }
  return j;
}

Json to_json(const PhiDirectedResult& r) {
  Json j;
  j["verdict"] = std::string(verdict_name(r.verdict));
  j["sampled"] = r.sampled;
  j["subsets_checked"] = r.subsets_checked;
  j["inf_phi"] = to_json(r.inf_phi);
  if (r.verdict == DirectedVerdict::kNo) {
    j["witness"] = r.witness;
    j["witness_value"] = to_json(r.witness_value);
  }
  j["shortcut_holds"] = r.shortcut_holds;
  j["shortcut_agrees"] = r.shortcut_agrees;
  return j;
}

Json to_json(const InterchangeReport& r) {
  Json j;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  if (r.prefix_lhs) j["prefix_lhs"] = to_json(*r.prefix_lhs);
  if (r.prefix_rhs) j["prefix_rhs"] = to_json(*r.prefix_rhs);
  j["lhs_diverging"] = r.lhs_diverging;
  j["rhs_diverging"] = r.rhs_diverging;
  j["phi_inf_directed"] = to_json(r.phi_inf_directed);
  j["interchange"] = std::string(verdict_name(r.interchange));
  j["holds"] = r.holds();
  j["notes"] = r.notes;
  j["invariant_failure"] = r.invariant_failure ? Json(*r.invariant_failure) : Json(nullptr);
  return j;
}

Json to_json(const SeqContinuityReport& r) {
  Json j;
  j["verdict"] = std::string(verdict_name(r.verdict));
  j["basis"] = std::string(basis_name(r.basis));
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["lhs_behavior"] = std::string(behavior_name(r.lhs_behavior.kind));
  j["notes"] = r.notes;
  return j;
}

Json to_json(const GapDirectedResult& r) {
  Json j;
  j["applicable"] = r.applicable;
  if (r.applicable) {
    j["integrably_inf_directed"] = r.directed;
    if (!r.directed) {
      j["witness"] = r.witness;
      j["witness_gap"] = to_json(r.witness_gap);
    }
  }
  return j;
}

Json to_json(const InfDirectedResult& r) {
  Json j;
  j["inf_directed"] = r.directed;
  if (r.witness) j["witness"] = {r.witness->first, r.witness->second};
  return j;
}

Json to_json(const DecomposableResult& r) {
  Json j;
  j["decomposable"] = r.decomposable;
  j["equals_projection_product"] = r.equals_projection_product;
  if (r.witness) {
    Json w;
    w["u"] = r.witness->first;
    w["v"] = r.witness->second;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < r.witness->where.universe_size(); ++i) {
      if (r.witness->where.contains(i)) where.push_back(i);
    }
    w["v_on_atoms"] = where;
    w["patched"] = r.witness->patched;
    j["witness"] = w;
  }
  return j;
}

Json to_json(const RwReport& r) {
  Json j;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  j["equal"] = r.equal;
  j["verdict"] = r.verdict;
  j["decomposable"] = to_json(r.decomposable);
  j["minimizer"] = r.minimizer;
  j["selections"] = r.selections;
  j["notes"] = r.notes;
  j["invariant_failure"] = r.invariant_failure ? Json(*r.invariant_failure) : Json(nullptr);
  return j;
}

Json to_json(const RwArgminReport& r) {
  Json j;
  j["applicable"] = r.applicable;
  j["value"] = to_json(r.value);
  j["argmin_count"] = r.argmin_count;
  j["holds"] = r.holds();
  Json mm = Json::array();
  for (const auto& m : r.mismatches) {
    mm.push_back({{"selection", m.selection}, {"in_argmin", m.in_argmin}, {"pointwise_argmin", m.pointwise_argmin}});
  }
  j["mismatches"] = mm;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const ShapiroReport& r) {
  Json j;
  Json h;
  h["S1_finite"] = r.s1_finite;
  h["S2a_norm_convergence"] = r.s2a_norm_convergence;
  h["S2b_liminf"] = r.s2b_liminf;
  j["hypotheses"] = h;
  j["failed_hypotheses"] = r.failed_hypotheses;
  Json gaps = Json::array();
  for (const auto& g : r.norm_gaps) gaps.push_back(to_json(g));
  j["norm_gaps"] = gaps;
  Json vals = Json::array();
  for (const auto& v : r.phi_along_sequence) vals.push_back(to_json(v));
  j["phi_along_sequence"] = vals;
  j["phi_g_flat"] = to_json(r.phi_g_flat);
  j["inf_phi"] = to_json(r.inf_phi);
  j["conclusion"] = r.conclusion;
  j["sampled"] = r.sampled;
  j["notes"] = r.notes;
  j["invariant_failure"] = r.invariant_failure ? Json(*r.invariant_failure) : Json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------

Scalar RunOptions::effective_tolerance() const {
  if (tolerance) return *tolerance;
  return backing() == Backing::kFloat ? Scalar::parse("1e-9") : Scalar(0);
}

InterchangeOptions RunOptions::interchange() const {
  InterchangeOptions o;
  o.directed.subset_budget = subset_budget;
  o.directed.seed = seed;
  o.directed.tolerance = effective_tolerance();
  return o;
}

Json environment(const RunOptions& options) {
  Json j;
  j["seed"] = options.seed;
  j["tolerance"] = to_json(options.effective_tolerance());
  j["backing"] = std::string(backing_name(backing()));
  j["subset_budget"] = options.subset_budget;
  j["divergence_threshold"] = to_json(options.divergence_threshold);
  j["version"] = kVersion;
  return j;
}

namespace {

SpacePtr example_2_6_space(std::size_t n) {
  std::vector<std::string> atoms;
  for (std::size_t k = 1; k <= n; ++k) atoms.push_back("(" + std::to_string(k) + "," + std::to_string(k + 1) + ")");
  return std::make_shared<const MeasureSpace>(std::move(atoms), std::vector<Scalar>(n, Scalar(1)), "R");
}

FnClass example_2_6_term(const SpacePtr& space, std::size_t n) {
  std::vector<ExtReal> v(space->size(), ExtReal::zero());
  v.at(n - 1) = ExtReal(Scalar(-static_cast<long long>(n)));
  return FnClass(space, std::move(v));
}

}  // namespace

Family example_2_6_family(std::size_t n) {
  if (n == 0) throw InputError("example-2-6 needs N >= 1");
  SpacePtr space = example_2_6_space(n);
  std::vector<FnClass> members;
  for (std::size_t k = 1; k <= n; ++k) members.push_back(example_2_6_term(space, k));
  return Family(std::move(members), Family::Origin::kGenerated);
}

SequenceSpec example_2_6_sequence(std::size_t prefix) {
  if (prefix == 0) throw InputError("example-2-6 needs a prefix >= 1");
  SequenceSpec seq;
  seq.name = "example-2-6";
  seq.prefix_len = prefix;
  seq.generator = [](std::size_t k) { return example_2_6_term(example_2_6_space(k + 1), k + 1); };
  return seq;
}

SequenceSpec shifted_decreasing_sequence(const FnClass& base, std::size_t prefix) {
  SequenceSpec seq;
  seq.name = "shifted-decreasing";
  seq.prefix_len = prefix;
  seq.declared_limit = base;
  seq.generator = [base](std::size_t n) {
    const ExtReal shift(Scalar::ratio(1, static_cast<long long>(n) + 1));
    std::vector<ExtReal> v;
    for (const auto& x : base.values()) v.push_back(lower_add(x, shift));
    return FnClass(base.space(), std::move(v));
  };
  return seq;
}

namespace {

std::vector<FnClass> fn_list(const Json& j, const SpacePtr& space, const char* what) {
  if (!j.is_array() || j.empty()) throw InputError(std::string(what) + " must be a nonempty array of functions");
  std::vector<FnClass> out;
  for (const auto& f : j) out.push_back(fn_from(f, space));
  return out;
}

}  // namespace

Scenario scenario_from(const Json& j, const RunOptions* overrides) {
  if (!j.is_object()) throw InputError("a scenario must be a JSON object");
  reject_unknown(j,
                 {"space", "family", "functional", "subset_budget", "divergence_threshold", "tolerance", "seed",
                  "declared_limit", "prefix", "description"},
                 "scenario");
  Scenario sc;
  RunOptions& o = sc.options;
  if (j.contains("subset_budget")) o.subset_budget = count_from(j["subset_budget"], "subset_budget");
  if (j.contains("divergence_threshold")) o.divergence_threshold = scalar_from(j["divergence_threshold"]);
  if (j.contains("tolerance")) o.tolerance = scalar_from(j["tolerance"]);
  if (j.contains("seed")) o.seed = count_from(j["seed"], "seed");
  if (j.contains("prefix")) o.prefix = count_from(j["prefix"], "prefix");
  if (overrides) {
    if (overrides->subset_budget != RunOptions{}.subset_budget) o.subset_budget = overrides->subset_budget;
    if (overrides->divergence_threshold != RunOptions{}.divergence_threshold) {
      o.divergence_threshold = overrides->divergence_threshold;
    }
    if (overrides->tolerance) o.tolerance = overrides->tolerance;
    if (overrides->seed != 0) o.seed = overrides->seed;
    if (overrides->prefix) o.prefix = overrides->prefix;
  }
  if (o.divergence_threshold.sign() <= 0) throw InputError("divergence_threshold must be positive");
  if (o.tolerance && o.tolerance->sign() < 0) throw InputError("tolerance must be nonnegative");

  if (j.contains("space")) sc.space = space_from(j["space"]);
  const Json& fam = field(j, "family");
  if (fam.is_array()) {
    if (!sc.space) throw InputError("a literal family needs a space");
    sc.family.emplace(fn_list(fam, sc.space, "family"));
  } else if (fam.is_object()) {
    const std::string gen = string_field(fam, "generator");
    std::size_t prefix = fam.contains("prefix") ? count_from(fam["prefix"], "prefix") : 0;
    if (o.prefix) prefix = *o.prefix;
    if (prefix == 0) throw InputError("generated families need a prefix >= 1");
    if (gen == "example-2-6") {
      const std::string mode = fam.contains("mode") ? string_field(fam, "mode") : "sequence";
      if (sc.space) throw InputError("example-2-6 generates its own space");
      if (mode == "literal") {
        sc.family.emplace(example_2_6_family(prefix));
        sc.space = sc.family->space();
      } else if (mode == "sequence") {
        sc.sequence = example_2_6_sequence(prefix);
        sc.space = sc.sequence->generator(prefix - 1).space();
      } else {
        throw InputError("example-2-6 mode must be 'sequence' or 'literal'");
      }
    } else if (gen == "repeat") {
      if (!sc.space) throw InputError("the repeat generator needs a space");
      FnClass f = fn_from(field(fam, "of"), sc.space);
      sc.sequence.emplace();
      sc.sequence->name = "repeat";
      sc.sequence->prefix_len = prefix;
      sc.sequence->generator = [f](std::size_t) { return f; };
    } else if (gen == "shifted-decreasing") {
      if (!sc.space) throw InputError("the shifted-decreasing generator needs a space");
      sc.sequence = shifted_decreasing_sequence(fn_from(field(fam, "base"), sc.space), prefix);
    } else if (gen == "cycle") {
      if (!sc.space) throw InputError("the cycle generator needs a space");
      Family members(fn_list(field(fam, "members"), sc.space, "cycle members"));
      sc.sequence = SequenceSpec::from_family(members);
      sc.sequence->prefix_len = prefix;
    } else {
      throw InputError("unknown generator '" + gen + "'");
    }
  } else {
    throw InputError("family must be an array of functions or a generator object");
  }
  if (sc.sequence) {
    sc.sequence->divergence_threshold = o.divergence_threshold;
    if (j.contains("declared_limit")) sc.sequence->declared_limit = fn_from(j["declared_limit"], sc.space);
  } else if (j.contains("declared_limit")) {
    throw InputError("declared_limit applies to generated sequences only");
  }
  sc.functional = j.contains("functional") ? functional_spec_from(j["functional"], sc.space) : FunctionalSpec{};
  return sc;
}

Json scenario_to_json(const MeasureSpace& space, const Family& family, const FunctionalSpec& functional,
                      const RunOptions& options) {
  Json j;
  j["space"] = to_json(space);
  Json fam = Json::array();
  for (const auto& f : family.members) fam.push_back(to_json(f));
  j["family"] = fam;
  j["functional"] = to_json(functional);
  j["subset_budget"] = options.subset_budget;
  j["divergence_threshold"] = to_json(options.divergence_threshold);
  if (options.tolerance) j["tolerance"] = to_json(*options.tolerance);
  j["seed"] = options.seed;
  return j;
}

}  // namespace interlab::io
