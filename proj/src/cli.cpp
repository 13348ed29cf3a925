#include "interlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "interlab/error.hpp"
#include "interlab/gallery.hpp"
#include "interlab/json_io.hpp"
#include "interlab/oracle.hpp"

namespace interlab::cli {

namespace {

using io::Json;

struct Flags {
  std::string format = "json";
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string tolerance;
  std::optional<std::size_t> prefix;
  std::string divergence_threshold;
  std::optional<std::size_t> subset_budget;

  io::RunOptions run_options() const {
    io::RunOptions o;
    if (seed) o.seed = *seed;
    if (!tolerance.empty()) {
      o.tolerance = Scalar::parse(tolerance);
      if (o.tolerance->sign() < 0) throw InputError("--tolerance must be nonnegative");
    }
    if (prefix) {
      if (*prefix == 0) throw InputError("--prefix must be at least 1");
      o.prefix = *prefix;
    }
    if (!divergence_threshold.empty()) {
      o.divergence_threshold = Scalar::parse(divergence_threshold);
      if (o.divergence_threshold.sign() <= 0) throw InputError("--divergence-threshold must be positive");
    }
    if (subset_budget) o.subset_budget = *subset_budget;
    return o;
  }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse_text(ss.str());
}

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    }
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

bool has_invariant_failure(const Json& j) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "invariant_failure" && !it.value().is_null()) return true;
      if (has_invariant_failure(it.value())) return true;
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (has_invariant_failure(e)) return true;
    }
  }
  return false;
}

void emit(const Json& report, const Flags& flags, std::ostream& out) {
  std::ostringstream text;
  if (flags.format == "text") {
    flatten(report, "", text);
  } else {
    text << report.dump(2) << "\n";
  }
  if (flags.out.empty()) {
    out << text.str();
    return;
  }
  std::ofstream f(flags.out);
  if (!f) throw InputError("cannot write '" + flags.out + "'");
  f << text.str();
}

Json cmd_check(const std::string& path, const Flags& flags) {
  const io::RunOptions cli_opts = flags.run_options();
  io::Scenario sc = io::scenario_from(read_json_file(path), &cli_opts);
  const Functional phi = make_builtin(sc.functional);
  const InterchangeOptions opts = sc.options.interchange();
  Json j;
  j["functional"] = phi.name();
  if (sc.family) {
    j["input"] = {{"kind", "family"}, {"size", sc.family->size()}};
    j["inf_directed"] = io::to_json(is_inf_directed(*sc.family));
    j["report"] = io::to_json(verify_interchange(*sc.family, phi, opts));
    if (sc.functional.kind == BuiltinKind::kExtendedLebesgue) {
      j["gap_form"] = io::to_json(is_gap_inf_directed(*sc.family, opts.directed));
    }
  } else {
    j["input"] = {{"kind", "sequence"}, {"generator", sc.sequence->name}, {"prefix", sc.sequence->prefix_len}};
    j["report"] = io::to_json(verify_interchange_sequence(*sc.sequence, phi, opts));
    try {
      j["seq_inf_continuity"] = io::to_json(check_seq_inf_continuity(phi, *sc.sequence, opts.directed.tolerance));
    } catch (const InputError& e) {
      j["seq_inf_continuity"] = {{"verdict", "not applicable"}, {"reason", e.what()}};
    }
  }
  j["environment"] = io::environment(sc.options);
  return j;
}

RwOptions rw_options(const Json& j, const io::RunOptions& o) {
  RwOptions r;
  if (j.contains("enumeration_budget")) {
    if (!j["enumeration_budget"].is_number_unsigned()) throw InputError("enumeration_budget must be a positive integer");
    r.enumeration_budget = j["enumeration_budget"].get<std::uint64_t>();
  }
  r.tolerance = o.effective_tolerance();
  if (j.contains("tolerance") && !o.tolerance) r.tolerance = io::scalar_from(j["tolerance"]);
  return r;
}

Json cmd_rw(const std::string& path, const Flags& flags) {
  const Json in = read_json_file(path);
  if (!in.is_object() || !in.contains("space") || !in.contains("integrand")) {
    throw InputError("rw-check input needs 'space' and 'integrand'");
  }
  const io::RunOptions o = flags.run_options();
  SpacePtr space = io::space_from(in["space"]);
  Integrand f = io::integrand_from(in["integrand"], space);
  SelectionSet U = in.contains("selections") ? io::selections_from(in["selections"], f)
                                             : SelectionSet::full_product(f.atoms(), f.control_count());
  const RwOptions ro = rw_options(in, o);
  Json j;
  RwReport rw = verify_rw_interchange(f, U, ro);
  j["interchange"] = io::to_json(rw);
  j["argmin"] = io::to_json(verify_rw_argmin(f, U, ro));
  j["environment"] = io::environment(o);
  return j;
}

Json cmd_shapiro(const std::string& path, const Flags& flags) {
  const Json in = read_json_file(path);
  if (!in.is_object()) throw InputError("shapiro-check input must be an object");
  const io::RunOptions o = flags.run_options();
  SpacePtr space = io::space_from(in.at("space"));
  Integrand f = io::integrand_from(in.at("integrand"), space);
  SelectionSet U = in.contains("selections") ? io::selections_from(in["selections"], f)
                                             : SelectionSet::full_product(f.atoms(), f.control_count());
  FunctionalSpec spec = in.contains("functional") ? io::functional_spec_from(in["functional"], space) : FunctionalSpec{};
  std::vector<Selection> seq;
  if (!in.contains("sequence") || !in["sequence"].is_array()) throw InputError("shapiro-check needs a 'sequence'");
  for (const auto& u : in["sequence"]) {
    Selection s;
    for (const auto& k : u) {
      if (!k.is_number_unsigned()) throw InputError("selection entries must be control indices");
      s.push_back(k.get<std::size_t>());
    }
    seq.push_back(std::move(s));
  }
  std::optional<FnClass> g_flat;
  if (in.contains("g_flat")) g_flat = io::fn_from(in["g_flat"], space);
  ShapiroScenario sc{make_builtin(spec), in.contains("p") ? io::scalar_from(in["p"]) : Scalar(1), f, U, seq, g_flat,
                     rw_options(in, o)};
  Json j;
  j["functional"] = sc.phi.name();
  j["report"] = io::to_json(verify_shapiro(sc));
  j["environment"] = io::environment(o);
  return j;
}

struct OracleFlags {
  std::size_t trials = 1000;
  std::size_t max_atoms = 6;
  std::size_t max_family = 5;
  std::string functional;
  bool finite = false;
};

Json cmd_oracle(const OracleFlags& of, const Flags& flags, bool* violated) {
  oracle::CampaignOptions co;
  const io::RunOptions o = flags.run_options();
  co.trials = of.trials;
  co.seed = o.seed;
  co.max_atoms = of.max_atoms;
  co.max_family = of.max_family;
  co.subset_budget = o.subset_budget;
  co.tolerance = o.tolerance;
  co.finite_values = of.finite;
  if (co.max_atoms == 0 || co.max_family == 0) throw InputError("--max-atoms and --max-family must be positive");
  if (co.max_atoms > 12) throw InputError("--max-atoms is limited to 12");
  if (!of.functional.empty()) {
    if (of.functional == "extended_lebesgue") {
      co.only = oracle::FunctionalKind::kExtendedLebesgue;
    } else if (of.functional == "choquet") {
      co.only = oracle::FunctionalKind::kChoquet;
    } else if (of.functional == "ess_sup") {
      co.only = oracle::FunctionalKind::kEssSup;
    } else {
      throw InputError("unknown functional '" + of.functional + "'");
    }
  }
  const oracle::CampaignSummary s = oracle::run_campaign(co);
  *violated = !s.ok();
  Json j = oracle::to_json(s, co);
  j["environment"] = io::environment(o);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks interchange of infimum and order-preserving functionals on finite measure spaces", "interlab"};
  app.require_subcommand(1);
  Flags flags;
  auto add_common = [&flags](CLI::App* cmd) {
    cmd->add_option("--format", flags.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", flags.out, "write the report to this path");
    cmd->add_option("--seed", flags.seed, "random seed");
    cmd->add_option("--tolerance", flags.tolerance, "comparison tolerance (e.g. 0, 1e-9, 1/1000)");
    cmd->add_option("--prefix", flags.prefix, "sequence prefix length");
    cmd->add_option("--divergence-threshold", flags.divergence_threshold, "magnitude declared -inf");
    cmd->add_option("--subset-budget", flags.subset_budget, "exhaustive subset scan up to this family size");
  };

  std::string scenario_path;
  auto* check = app.add_subcommand("check", "verify the interchange formula for a scenario file");
  check->add_option("scenario", scenario_path, "scenario JSON")->required();
  add_common(check);

  std::string gallery_name;
  auto* gallery = app.add_subcommand("gallery", "run a built-in example");
  gallery->add_option("name", gallery_name, "example name")->required()->check(CLI::IsMember(gallery::names()));
  add_common(gallery);

  OracleFlags of;
  auto* oracle_cmd = app.add_subcommand("oracle", "randomized equivalence campaign");
  oracle_cmd->add_option("--trials", of.trials, "number of instances");
  oracle_cmd->add_option("--max-atoms", of.max_atoms, "largest space");
  oracle_cmd->add_option("--max-family", of.max_family, "largest family");
  oracle_cmd->add_option("--functional", of.functional, "restrict to extended_lebesgue, choquet or ess_sup");
  oracle_cmd->add_flag("--finite", of.finite, "finite values only");
  add_common(oracle_cmd);

  std::string rw_path;
  auto* rw = app.add_subcommand("rw-check", "brute-force interchange over selections of an integrand");
  rw->add_option("input", rw_path, "integrand JSON")->required();
  add_common(rw);

  std::string shapiro_path;
  auto* shapiro = app.add_subcommand("shapiro-check", "check hypotheses and conclusion along a selection sequence");
  shapiro->add_option("input", shapiro_path, "scenario JSON")->required();
  add_common(shapiro);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    Json report;
    bool violated = false;
    if (*check) {
      report = cmd_check(scenario_path, flags);
    } else if (*gallery) {
      report = gallery::run(gallery_name, flags.run_options());
    } else if (*oracle_cmd) {
      report = cmd_oracle(of, flags, &violated);
    } else if (*rw) {
      report = cmd_rw(rw_path, flags);
    } else {
      report = cmd_shapiro(shapiro_path, flags);
    }
    emit(report, flags, out);
    if (violated) {
      err << "error: oracle campaign found violations; minimal scenarios are in the report\n";
      return kExitInvariant;
    }
    if (has_invariant_failure(report)) {
      err << "error: library invariant failure; see the report\n";
      return kExitInvariant;
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const InvariantFailure& e) {
    err << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace interlab::cli
