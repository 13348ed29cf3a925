#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "interlab/functional.hpp"
#include "interlab/interchange.hpp"
#include "interlab/json_io.hpp"

namespace interlab::oracle {

enum class FunctionalKind { kExtendedLebesgue, kChoquet, kEssSup };
std::string_view kind_name(FunctionalKind k);

/// A random (space, family, functional) triple. Members are kept as raw
/// value rows so the shrinker can rebuild them on smaller spaces.
struct Instance {
  SpacePtr space;
  std::vector<std::vector<ExtReal>> members;
  FunctionalKind kind = FunctionalKind::kExtendedLebesgue;
  std::optional<Capacity> capacity;

  Family family() const;
  FunctionalSpec spec() const;
  Functional functional() const;
};

struct CampaignOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t max_atoms = 6;
  std::size_t max_family = 5;
  std::size_t subset_budget = 12;
  /// Restrict to one functional kind.
  std::optional<FunctionalKind> only;
  /// Draw values from the finite grid only.
  bool finite_values = false;
  std::optional<Scalar> tolerance;
};

/// Instance number `trial` of the campaign; depends only on (seed, trial).
Instance random_instance(std::uint64_t seed, std::size_t trial, const CampaignOptions& options);

/// Returns a description of the violated property, or nothing.
using Check = std::function<std::optional<std::string>(const Instance&)>;

/// The interchange equivalence, the one-sided bound, the shortcut agreement,
/// the inf-directed implication and agreement of the sequence path.
std::optional<std::string> equivalence_check(const Instance& inst, const InterchangeOptions& options);

/// Greedily drops members and atoms and simplifies values and weights while
/// `check` keeps failing. Exceptions from `check` count as passing.
Instance shrink(const Instance& failing, const Check& check);

struct Violation {
  std::size_t trial = 0;
  std::string message;
  Instance minimal;
};

struct CampaignSummary {
  std::size_t trials = 0;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t directed_yes = 0;
  std::size_t directed_no = 0;
  std::size_t directed_diverging = 0;
  std::size_t inf_directed = 0;
  std::vector<std::size_t> per_kind = std::vector<std::size_t>(3, 0);
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Runs the campaign; `check` defaults to equivalence_check.
CampaignSummary run_campaign(const CampaignOptions& options, const Check& check = {});

io::Json to_json(const CampaignSummary& s, const CampaignOptions& options);
io::Json scenario_json(const Instance& inst, const CampaignOptions& options);

}  // namespace interlab::oracle
