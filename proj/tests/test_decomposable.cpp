#include <gtest/gtest.h>

#include "interlab/decomposable.hpp"
#include "interlab/error.hpp"
#include "interlab/gallery.hpp"
#include "interlab/random.hpp"

using namespace interlab;

namespace {
const ExtReal kPlus = ExtReal::plus_inf();
const ExtReal kMinus = ExtReal::minus_inf();
SpacePtr units(std::size_t n) { return MeasureSpace::make(std::vector<Scalar>(n, Scalar(1))); }
std::vector<Control> line(std::size_t n) {
  std::vector<Control> c;
  for (std::size_t j = 0; j < n; ++j) c.push_back({Scalar(static_cast<long long>(j))});
  return c;
}
}  // namespace

TEST(Integrand, Validates) {
  EXPECT_THROW(Integrand(units(2), line(2), {{0, 1}}), InputError);
  EXPECT_THROW(Integrand(units(1), line(2), {{0}}), InputError);
  EXPECT_THROW(Integrand(units(1), {{Scalar(0)}, {Scalar(0)}}, {{0, 1}}), InputError);
}

TEST(SelectionSet, EnumerationAndMembership) {
  SelectionSet p = SelectionSet::product(3, {{0, 2}, {1}, {0, 1, 2}});
  EXPECT_EQ(p.count(), 6u);
  std::vector<Selection> seen;
  p.for_each([&](const Selection& u) {
    seen.push_back(u);
    return true;
  });
  ASSERT_EQ(seen.size(), 6u);
  EXPECT_EQ(seen.front(), (Selection{0, 1, 0}));
  EXPECT_EQ(seen.back(), (Selection{2, 1, 2}));
  EXPECT_TRUE(p.contains({2, 1, 1}));
  EXPECT_FALSE(p.contains({1, 1, 1}));
  EXPECT_THROW(SelectionSet::explicit_set(2, 2, {{0, 5}}), InputError);
  EXPECT_THROW(SelectionSet::product(2, {{}}), InputError);
}

TEST(Decomposable, Examples) {
  MeasureSpace s({"a", "b"}, {Scalar(1), Scalar(1)});
  EXPECT_TRUE(is_decomposable(SelectionSet::full_product(2, 3), s).decomposable);

  auto two = is_decomposable(SelectionSet::explicit_set(2, 2, {{0, 0}, {1, 1}}), s);
  EXPECT_FALSE(two.decomposable);
  EXPECT_FALSE(two.equals_projection_product);
  ASSERT_TRUE(two.witness.has_value());
  const Selection& mixed = two.witness->patched;
  EXPECT_NE(mixed[0], mixed[1]);

  auto full = is_decomposable(SelectionSet::explicit_set(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}), s);
  EXPECT_TRUE(full.decomposable);
  EXPECT_TRUE(full.equals_projection_product);
}

TEST(Decomposable, NullAtomsDoNotCount) {
  MeasureSpace s({"a", "b"}, {Scalar(1), Scalar(0)});
  EXPECT_TRUE(is_decomposable(SelectionSet::explicit_set(2, 2, {{0, 0}, {1, 1}}), s).decomposable);
}

TEST(DecomposableProperty, PatchScanAgreesWithProjectionProduct) {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const std::size_t atoms = 1 + rng.below(3);
    const std::size_t controls = 1 + rng.below(3);
    auto s = random_space(rng, atoms);
    std::vector<Selection> members;
    for (std::size_t k = 0, n = 1 + rng.below(6); k < n; ++k) {
      Selection u;
      for (std::size_t i = 0; i < atoms; ++i) u.push_back(rng.below(controls));
      members.push_back(u);
    }
    // is_decomposable throws InvariantFailure on disagreement.
    EXPECT_NO_THROW(is_decomposable(SelectionSet::explicit_set(atoms, controls, members), *s));
  }
}

TEST(RockafellarWets, Examples) {
  Integrand id(units(2), line(2), {{0, 1}, {0, 1}});
  auto r = verify_rw_interchange(id, SelectionSet::full_product(2, 2));
  EXPECT_EQ(r.lhs, ExtReal(0));
  EXPECT_EQ(r.rhs, ExtReal(0));
  EXPECT_EQ(r.verdict, "holds");

  auto sq = gallery::rw_squared_distance();
  auto r2 = verify_rw_interchange(sq.integrand, sq.selections);
  EXPECT_EQ(r2.lhs, ExtReal(0));
  EXPECT_TRUE(r2.equal);
  EXPECT_EQ(r2.minimizer, (Selection{0, 2, 1}));

  auto two = gallery::rw_two_constants();
  auto r3 = verify_rw_interchange(two.integrand, two.selections);
  EXPECT_EQ(r3.lhs, ExtReal(1));
  EXPECT_EQ(r3.rhs, ExtReal(0));
  EXPECT_EQ(r3.verdict, "hypothesis violated, inequality strict");
  EXPECT_FALSE(r3.invariant_failure);
}

TEST(RockafellarWets, Preconditions) {
  Integrand all_plus(units(2), line(2), {{kPlus, kPlus}, {0, 1}});
  EXPECT_THROW(verify_rw_interchange(all_plus, SelectionSet::full_product(2, 2)), DomainError);
  RwOptions small;
  small.enumeration_budget = 3;
  Integrand id(units(2), line(2), {{0, 1}, {0, 1}});
  EXPECT_THROW(verify_rw_interchange(id, SelectionSet::full_product(2, 2), small), DomainError);
}

TEST(RockafellarWets, Argmin) {
  Integrand id(units(2), line(2), {{0, 1}, {0, 1}});
  auto a = verify_rw_argmin(id, SelectionSet::full_product(2, 2));
  EXPECT_TRUE(a.holds());
  EXPECT_EQ(a.argmin_count, 1u);

  Integrand two_min(units(2), line(3), {{0, 0, 1}, {1, 0, 0}});
  auto b = verify_rw_argmin(two_min, SelectionSet::full_product(2, 3));
  EXPECT_TRUE(b.holds());
  EXPECT_EQ(b.argmin_count, 4u);

  auto with_null = MeasureSpace::make({Scalar(1), Scalar(0)});
  Integrand nul(with_null, line(2), {{0, 1}, {0, 1}});
  auto c = verify_rw_argmin(nul, SelectionSet::full_product(2, 2));
  EXPECT_TRUE(c.holds());
  EXPECT_EQ(c.argmin_count, 2u);

  Integrand minus(units(1), line(2), {{kMinus, 0}});
  auto d = verify_rw_argmin(minus, SelectionSet::full_product(1, 2));
  EXPECT_FALSE(d.applicable);
}

TEST(RockafellarWetsProperty, ProductSetsInterchange) {
  Rng rng(42);
  const std::vector<ExtReal> grid{kMinus, -2, -1, 0, 1, 3, kPlus};
  for (int t = 0; t < 150; ++t) {
    const std::size_t atoms = 1 + rng.below(3), controls = 1 + rng.below(3);
    auto s = random_space(rng, atoms);
    std::vector<std::vector<ExtReal>> table(atoms);
    for (auto& row : table) {
      for (std::size_t j = 0; j < controls; ++j) row.push_back(rng.pick(std::span<const ExtReal>(grid)));
    }
    Integrand f(s, line(controls), table);
    SelectionSet U = SelectionSet::full_product(atoms, controls);
    try {
      auto r = verify_rw_interchange(f, U);
      EXPECT_TRUE(r.equal);
      EXPECT_FALSE(r.invariant_failure);
      auto a = verify_rw_argmin(f, U);
      if (a.applicable) EXPECT_TRUE(a.holds());
    } catch (const DomainError&) {
      // No selection with G(u) in L1+.
    }
  }
}

TEST(Shapiro, ExpectationDemo) {
  auto r = verify_shapiro(gallery::shapiro_demo(false));
  EXPECT_TRUE(r.s1_finite);
  EXPECT_TRUE(r.s2a_norm_convergence);
  EXPECT_TRUE(r.s2b_liminf);
  EXPECT_TRUE(r.conclusion);
  EXPECT_EQ(r.phi_g_flat, ExtReal(0));
  EXPECT_EQ(r.inf_phi, ExtReal(0));
}

TEST(Shapiro, StepOfEssSupFailsS2b) {
  auto r = verify_shapiro(gallery::shapiro_demo(true));
  EXPECT_TRUE(r.s2a_norm_convergence);
  EXPECT_FALSE(r.s2b_liminf);
  ASSERT_EQ(r.failed_hypotheses.size(), 1u);
  EXPECT_EQ(r.failed_hypotheses[0].rfind("S2b", 0), 0u);
}

TEST(Shapiro, ConstantIntegrand) {
  auto s = MeasureSpace::make({Scalar::ratio(1, 2), Scalar::ratio(1, 2)});
  Integrand f(s, line(2), {{3, 3}, {3, 3}});
  ShapiroScenario sc{extended_lebesgue_functional(), Scalar(2), f, SelectionSet::full_product(2, 2),
                     {{0, 0}, {1, 1}, {0, 1}}, std::nullopt, {}};
  auto r = verify_shapiro(sc);
  EXPECT_TRUE(r.failed_hypotheses.empty());
  EXPECT_TRUE(r.conclusion);
}

TEST(Shapiro, RequiresProbabilitySpace) {
  Integrand f(units(2), line(1), {{0}, {0}});
  ShapiroScenario sc{extended_lebesgue_functional(), Scalar(1), f, SelectionSet::full_product(2, 1), {{0, 0}},
                     std::nullopt, {}};
  EXPECT_THROW(verify_shapiro(sc), InputError);
}

TEST(Shapiro, InfiniteValuesFailS1) {
  auto s = MeasureSpace::make({Scalar(1)});
  Integrand f(s, line(2), {{kPlus, 0}});
  ShapiroScenario sc{ess_sup_functional(), Scalar(1), f, SelectionSet::full_product(1, 2), {{1}},
                     std::nullopt, {}};
  auto r = verify_shapiro(sc);
  EXPECT_FALSE(r.s1_finite);
}
