#include <gtest/gtest.h>

#include "interlab/error.hpp"
#include "interlab/functional.hpp"

using namespace interlab;

namespace {
const ExtReal kPlus = ExtReal::plus_inf();
const ExtReal kMinus = ExtReal::minus_inf();
}  // namespace

TEST(Functional, EssSupIgnoresNullAtoms) {
  auto s = MeasureSpace::make({Scalar(1), Scalar(0)});
  EXPECT_EQ(ess_sup(FnClass(s, {0, 5})), ExtReal(0));
  auto all_null = MeasureSpace::make({Scalar(0), Scalar(0)}, std::nullopt);
  EXPECT_EQ(ess_sup(FnClass(all_null, {1, 2})), kMinus);
}

TEST(Functional, DomainIsEnforced) {
  auto s = MeasureSpace::make({Scalar(1), Scalar(1)});
  Functional phi = extended_lebesgue_functional();
  EXPECT_THROW(phi(FnClass(s, {kPlus, 0})), DomainError);
  EXPECT_EQ(phi(FnClass(s, {kMinus, 0})), kMinus);
  Functional ch = choquet_functional(Capacity::of_measure(s));
  EXPECT_THROW(ch(FnClass(s, {-1, 0})), DomainError);
}

TEST(Functional, PostComposeRejectsDecreasingMaps) {
  EXPECT_THROW(post_compose(ess_sup_functional(), ScalarMap::affine(Scalar(-1), Scalar(0))), InputError);
  Functional g = post_compose(ess_sup_functional(), ScalarMap::clamp(ExtReal(0), ExtReal(1)));
  EXPECT_TRUE(g.properties().order_preserving);
  EXPECT_FALSE(g.properties().sequentially_inf_continuous);
  auto s = MeasureSpace::make({Scalar(1)});
  EXPECT_EQ(g(FnClass(s, {5})), ExtReal(1));
}

TEST(Functional, BuiltinsAreOrderPreserving) {
  auto s = MeasureSpace::make({Scalar(1), Scalar(0), Scalar::ratio(1, 2), Scalar(2)});
  std::vector<Functional> phis{extended_lebesgue_functional(), outer_integral_functional(),
                               inner_integral_functional(), ess_sup_functional(),
                               choquet_functional(Capacity::distortion(s, Scalar::ratio(1, 2)))};
  for (const auto& phi : phis) {
    OrderCheckReport r = check_order_preserving(phi, s, 500, 3);
    EXPECT_EQ(r.violations, 0u) << phi.name();
    EXPECT_GT(r.trials, 0u);
  }
}

TEST(Functional, OrderCheckCatchesNegatedIntegral) {
  auto s = MeasureSpace::make({Scalar(1), Scalar(1)});
  Functional bad("negated integral", ValueDomain::kL1Plus,
                 [](const FnClass& f) { return neg(lebesgue_extended(f)); }, {});
  OrderCheckReport r = check_order_preserving(bad, s, 200, 1);
  EXPECT_GT(r.violations, 0u);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_GT(r.witness->phi_lower, r.witness->phi_upper);
}

TEST(Functional, MakeBuiltin) {
  FunctionalSpec spec;
  spec.kind = BuiltinKind::kChoquet;
  EXPECT_THROW(make_builtin(spec), InputError);
  spec.kind = BuiltinKind::kEssSup;
  EXPECT_EQ(make_builtin(spec).name(), ess_sup_functional().name());
}
