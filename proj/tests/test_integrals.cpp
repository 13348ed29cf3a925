#include <gtest/gtest.h>

#include <cmath>

#include "interlab/error.hpp"
#include "interlab/integrals.hpp"
#include "interlab/random.hpp"
#include "oracles.hpp"

using namespace interlab;

namespace {
const ExtReal kPlus = ExtReal::plus_inf();
const ExtReal kMinus = ExtReal::minus_inf();
SpacePtr space(std::vector<Scalar> w) { return MeasureSpace::make(std::move(w)); }
}  // namespace

TEST(Lebesgue, NonnegativeExamples) {
  EXPECT_EQ(lebesgue_nonneg(FnClass(space({1, 2}), {3, kPlus})), kPlus);
  EXPECT_EQ(lebesgue_nonneg(FnClass(space({1, 0}), {3, kPlus})), ExtReal(3));
  EXPECT_THROW(lebesgue_nonneg(FnClass(space({1, 1}), {3, -1})), DomainError);
  // A negative value on a null atom is invisible.
  EXPECT_EQ(lebesgue_nonneg(FnClass(space({1, 0}), {3, -1})), ExtReal(3));
}

TEST(Lebesgue, ExtendedExamples) {
  EXPECT_EQ(lebesgue_extended(FnClass(space({1, 1}), {5, kMinus})), kMinus);
  EXPECT_EQ(lebesgue_extended(FnClass(space({1, 1}), {1, -3})), ExtReal(-2));
  EXPECT_THROW(lebesgue_extended(FnClass(space({1, 1}), {kPlus, kMinus})), DomainError);
}

TEST(OuterInner, Examples) {
  FnClass f(space({1, 1}), {kPlus, kMinus});
  EXPECT_EQ(outer_integral(f), kPlus);
  EXPECT_EQ(inner_integral(f), kMinus);
}

TEST(Choquet, WorkedExample) {
  auto s = std::make_shared<const MeasureSpace>(std::vector<std::string>{"a", "b"}, std::vector<Scalar>{1, 1});
  Capacity c = Capacity::table(s, {0, ExtReal(Scalar::parse("0.5")), ExtReal(Scalar::parse("0.7")), 1});
  EXPECT_EQ(choquet(FnClass(s, {1, 2}), c), ExtReal(Scalar::parse("1.7")));
}

TEST(Choquet, InfinitePlateau) {
  auto s = space({1, 1});
  Capacity c = Capacity::table(s, {0, 0, 1, 1});
  EXPECT_EQ(choquet(FnClass(s, {kPlus, 1}), c), ExtReal(1));
  EXPECT_EQ(choquet(FnClass(s, {1, kPlus}), c), kPlus);
  EXPECT_THROW(choquet(FnClass(s, {-1, 1}), c), DomainError);
}

TEST(Choquet, MeasureCapacityIsLebesgue) {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    auto s = random_space(rng, 1 + rng.below(5));
    FnClass f = random_fn(rng, s, ValueDomain::kNonnegative);
    EXPECT_EQ(choquet(f, Capacity::of_measure(s)), lebesgue_nonneg(f));
  }
}

TEST(Capacity, RejectsBadTables) {
  auto s = space({1, 1});
  EXPECT_THROW(Capacity::table(s, {0, 1, 1}), InputError);
  EXPECT_THROW(Capacity::table(s, {1, 1, 1, 1}), InputError);
  EXPECT_THROW(Capacity::table(s, {0, 2, 1, 1}), InputError);
  EXPECT_THROW(Capacity::table(s, {0, -1, 1, 1}), InputError);
}

TEST(Capacity, Distortion) {
  auto s = space({1, 3});
  Capacity c = Capacity::distortion(s, Scalar(2));
  EXPECT_EQ(c(AtomSet::from_mask(2, 1)), ExtReal(Scalar::ratio(1, 4)));
  EXPECT_EQ(c(AtomSet::all(2)), ExtReal(4));
}

// Closed forms against the independent reference, over random functions.
TEST(IntegralsProperty, ClosedForms) {
  Rng rng(21);
  for (int t = 0; t < 2000; ++t) {
    auto s = random_space(rng, 1 + rng.below(6));
    FnClass f = random_fn(rng, s, ValueDomain::kAll);
    auto plus = oracle_ref::part_integral(f, 1);
    auto minus = oracle_ref::part_integral(f, -1);
    EXPECT_TRUE(oracle_ref::same(oracle_ref::upper_diff(plus, minus), outer_integral(f)));
    EXPECT_TRUE(oracle_ref::same(oracle_ref::lower_diff(plus, minus), inner_integral(f)));
    EXPECT_GE(outer_integral(f), inner_integral(f));
    if (classify(f) != IntegrabilityTag::kL0Only) {
      EXPECT_EQ(outer_integral(f), lebesgue_extended(f));
      EXPECT_EQ(inner_integral(f), lebesgue_extended(f));
    }
    EXPECT_EQ(inner_integral(f), neg(outer_integral(negate(f))));
  }
}

TEST(IntegralsProperty, ChoquetMatchesRiemann) {
  Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    auto s = random_space(rng, 1 + rng.below(4));
    Capacity c = random_capacity(rng, s);
    std::vector<ExtReal> v;
    for (std::size_t i = 0; i < s->size(); ++i) v.emplace_back(Scalar::ratio(static_cast<long long>(rng.below(301)), 100));
    FnClass f(s, v);
    EXPECT_NEAR(choquet(f, c).to_double(), oracle_ref::choquet_riemann(f, c, 1e-3), 1e-6);
  }
}

TEST(IntegralsProperty, ChoquetMonotoneAndHomogeneous) {
  Rng rng(23);
  for (int t = 0; t < 500; ++t) {
    auto s = random_space(rng, 1 + rng.below(5));
    Capacity c = random_capacity(rng, s);
    FnClass g = random_fn(rng, s, ValueDomain::kNonnegative);
    FnClass f = random_below(rng, g, ValueDomain::kNonnegative, false);
    EXPECT_LE(choquet(f, c), choquet(g, c));
    EXPECT_EQ(choquet(scale(Scalar(3), g), c), scalar_mul(Scalar(3), choquet(g, c)));
  }
}

TEST(FiniteDifference, ZeroOnNullAtoms) {
  auto s = space({1, 0});
  FnClass d = finite_difference(FnClass(s, {3, kPlus}), FnClass(s, {1, kPlus}));
  EXPECT_EQ(d[0], ExtReal(2));
  EXPECT_EQ(d[1], ExtReal(0));
}
