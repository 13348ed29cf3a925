#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "interlab/decomposable.hpp"
#include "interlab/functional.hpp"
#include "interlab/interchange.hpp"

namespace interlab::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

// Reading. Every schema problem is reported as InputError.

/// A JSON number or a string such as "1/3" or "0.1". Numbers are read from
/// their shortest decimal text, so 0.1 means 1/10.
Scalar scalar_from(const Json& j);
/// As scalar_from, plus "+inf", "inf", "-inf".
ExtReal ext_from(const Json& j);
/// {"atoms": [...], "weights": [...], "truncation_of": "..."}; atoms default
/// to w0, w1, ...
SpacePtr space_from(const Json& j);
/// An array aligned with the atoms, or an object keyed by atom id.
FnClass fn_from(const Json& j, const SpacePtr& space);
/// {"kind": "table", "values": {"{a}": 0.5, "{a,b}": 1, ...}} or
/// {"kind": "distortion", "gamma": 0.8} or {"kind": "measure"}.
Capacity capacity_from(const Json& j, const SpacePtr& space);
ScalarMap map_from(const Json& j);
FunctionalSpec functional_spec_from(const Json& j, const SpacePtr& space);
/// {"controls": [[0], [1]], "table": [[...], ...]} with one row per atom.
Integrand integrand_from(const Json& j, const SpacePtr& space);
/// {"kind": "product", "admissible": [[0, 1], ...]} or
/// {"kind": "full"} or {"kind": "explicit", "members": [[0, 1], ...]}.
SelectionSet selections_from(const Json& j, const Integrand& f);

/// Parses text; malformed JSON is an InputError.
Json parse_text(const std::string& text);

// Writing.

Json to_json(const Scalar& s);
Json to_json(const ExtReal& x);
Json to_json(const MeasureSpace& space);
Json to_json(const FnClass& f);
Json to_json(const Capacity& c);
Json to_json(const ScalarMap& g);
Json to_json(const FunctionalSpec& spec);
Json to_json(const Integrand& f);
Json to_json(const SelectionSet& U);

Json to_json(const PhiDirectedResult& r);
Json to_json(const InterchangeReport& r);
Json to_json(const SeqContinuityReport& r);
Json to_json(const GapDirectedResult& r);
Json to_json(const InfDirectedResult& r);
Json to_json(const DecomposableResult& r);
Json to_json(const RwReport& r);
Json to_json(const RwArgminReport& r);
Json to_json(const ShapiroReport& r);

/// Common run options read from a scenario and overridden by CLI flags.
struct RunOptions {
  std::size_t subset_budget = 12;
  Scalar divergence_threshold = Scalar(1000000000);
  /// Defaults to 0 under rational backing and 1e-9 under float backing.
  std::optional<Scalar> tolerance;
  std::uint64_t seed = 0;
  std::optional<std::size_t> prefix;

  Scalar effective_tolerance() const;
  InterchangeOptions interchange() const;
};

/// Seed, tolerance, backing and version.
Json environment(const RunOptions& options);

/// An interchange scenario: a literal family or a generated sequence.
struct Scenario {
  SpacePtr space;
  std::optional<Family> family;
  std::optional<SequenceSpec> sequence;
  FunctionalSpec functional;
  RunOptions options;
};

/// Reads a scenario. `overrides` (from the command line) win over the
/// scenario's own fields.
Scenario scenario_from(const Json& j, const RunOptions* overrides = nullptr);
/// Writes a literal-family scenario that scenario_from reads back.
Json scenario_to_json(const MeasureSpace& space, const Family& family, const FunctionalSpec& functional,
                      const RunOptions& options);

// Built-in generators, shared with the gallery.

/// x_n = -n on the atom (n, n+1), 0 elsewhere, n = 1..N, unit weights, on the
/// truncation with atoms (1,2), ..., (N,N+1).
Family example_2_6_family(std::size_t n);
/// Term k (0-based) is x_{k+1} on the truncation with k+1 atoms.
SequenceSpec example_2_6_sequence(std::size_t prefix);
/// f + 1/(n+1), with declared limit f.
SequenceSpec shifted_decreasing_sequence(const FnClass& base, std::size_t prefix);

}  // namespace interlab::io
