#include <gtest/gtest.h>

#include "interlab/error.hpp"
#include "interlab/oracle.hpp"

using namespace interlab;

TEST(Oracle, InstancesAreReproducible) {
  oracle::CampaignOptions o;
  for (std::size_t t = 0; t < 50; ++t) {
    auto a = oracle::random_instance(3, t, o);
    auto b = oracle::random_instance(3, t, o);
    EXPECT_EQ(a.members, b.members);
    EXPECT_EQ(*a.space, *b.space);
    EXPECT_LE(a.space->size(), 6u);
    EXPECT_LE(a.members.size(), 5u);
    EXPECT_TRUE(a.functional().in_domain(a.family().members.front()));
  }
}

TEST(Oracle, SmallCampaignIsClean) {
  oracle::CampaignOptions o;
  o.trials = 300;
  o.seed = 17;
  auto s = oracle::run_campaign(o);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.trials, 300u);
  EXPECT_GT(s.holds, 0u);
  EXPECT_GT(s.fails, 0u);
  for (std::size_t k : s.per_kind) EXPECT_GT(k, 0u);
}

// A deliberately broken "functional", the negated integral, must be caught
// and shrunk to a small reproducing instance.
TEST(Oracle, ShrinkerMinimizesBrokenFunctional) {
  Functional bad("negated integral", ValueDomain::kL1Plus,
                 [](const FnClass& f) { return neg(lebesgue_extended(f)); }, {});
  InterchangeOptions opts;
  opts.order_check_trials = 20;
  oracle::Check check = [&](const oracle::Instance& inst) -> std::optional<std::string> {
    auto r = verify_interchange(inst.family(), bad, opts);
    if (r.invariant_failure) return *r.invariant_failure;
    return std::nullopt;
  };
  oracle::CampaignOptions o;
  o.trials = 40;
  o.seed = 1;
  o.only = oracle::FunctionalKind::kExtendedLebesgue;
  auto s = oracle::run_campaign(o, check);
  ASSERT_FALSE(s.ok());
  for (const auto& v : s.violations) {
    // Still failing, and no larger than the original.
    EXPECT_TRUE(check(v.minimal).has_value());
    const auto original = oracle::random_instance(o.seed, v.trial, o);
    EXPECT_LE(v.minimal.members.size(), original.members.size());
    EXPECT_LE(v.minimal.space->size(), original.space->size());
    // Two members on one atom suffice to break the one-sided bound.
    EXPECT_LE(v.minimal.members.size(), 2u);
    EXPECT_EQ(v.minimal.space->size(), 1u);
  }
  auto j = oracle::to_json(s, o);
  EXPECT_EQ(j["violation_count"], s.violations.size());
  EXPECT_TRUE(j["violations"][0]["minimal_scenario"].contains("family"));
}
