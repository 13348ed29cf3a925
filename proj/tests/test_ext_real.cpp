#include <gtest/gtest.h>

#include "interlab/error.hpp"
#include "interlab/ext_real.hpp"
#include "interlab/random.hpp"

using namespace interlab;

namespace {
const ExtReal kPlus = ExtReal::plus_inf();
const ExtReal kMinus = ExtReal::minus_inf();
}  // namespace

TEST(ExtReal, ExtendedAdditions) {
  EXPECT_EQ(lower_add(kPlus, kMinus), kMinus);
  EXPECT_EQ(upper_add(kPlus, kMinus), kPlus);
  EXPECT_EQ(lower_add(ExtReal(2), ExtReal(3)), ExtReal(5));
  EXPECT_EQ(upper_add(kMinus, ExtReal(3)), kMinus);
  EXPECT_THROW(plain_add(kPlus, kMinus), DomainError);
}

TEST(ExtReal, ScalarMultiplication) {
  EXPECT_EQ(scalar_mul(Scalar(0), kPlus), ExtReal(0));
  EXPECT_EQ(scalar_mul(Scalar(-2), kPlus), kMinus);
  EXPECT_EQ(scalar_mul(Scalar(3), kMinus), kMinus);
  EXPECT_EQ(scalar_mul(Scalar::ratio(1, 2), ExtReal(5)), ExtReal(Scalar::ratio(5, 2)));
}

TEST(ExtReal, Parts) {
  EXPECT_EQ(pos_part(ExtReal(-3)), ExtReal(0));
  EXPECT_EQ(neg_part(ExtReal(-3)), ExtReal(3));
  EXPECT_EQ(neg_part(kMinus), kPlus);
  EXPECT_EQ(pos_part(kMinus), ExtReal(0));
}

TEST(ExtReal, ParseAndPrint) {
  EXPECT_EQ(ExtReal::parse("+inf"), kPlus);
  EXPECT_EQ(ExtReal::parse("inf"), kPlus);
  EXPECT_EQ(ExtReal::parse("-inf"), kMinus);
  EXPECT_EQ(ExtReal::parse("1/2"), ExtReal(Scalar::ratio(1, 2)));
  EXPECT_EQ(kPlus.to_string(), "+inf");
  EXPECT_THROW(kPlus.value(), DomainError);
}

TEST(ExtReal, OrderIsTotal) {
  EXPECT_LT(kMinus, ExtReal(-1000000));
  EXPECT_LT(ExtReal(1000000), kPlus);
  EXPECT_EQ(min(kPlus, ExtReal(1)), ExtReal(1));
  EXPECT_EQ(max(kMinus, ExtReal(1)), ExtReal(1));
}

TEST(ExtReal, ToleranceComparisons) {
  EXPECT_TRUE(approx_equal(ExtReal(1), ExtReal(Scalar::parse("1.0000000001")), Scalar::parse("1e-9")));
  EXPECT_FALSE(approx_equal(ExtReal(1), ExtReal(Scalar::parse("1.0000000001")), Scalar(0)));
  EXPECT_FALSE(approx_equal(kPlus, ExtReal(1000000000), Scalar(1000000000)));
  EXPECT_TRUE(approx_leq(ExtReal(Scalar::parse("1.0000000001")), ExtReal(1), Scalar::parse("1e-9")));
}

// Algebraic laws over the value grid.
TEST(ExtRealProperty, AdditionLaws) {
  const auto& g = value_grid();
  for (const auto& a : g) {
    for (const auto& b : g) {
      EXPECT_EQ(lower_add(a, b), lower_add(b, a));
      EXPECT_EQ(upper_add(a, b), upper_add(b, a));
      EXPECT_LE(lower_add(a, b), upper_add(a, b));
      // Negation swaps the two additions.
      EXPECT_EQ(neg(lower_add(a, b)), upper_add(neg(a), neg(b)));
      for (const auto& c : g) {
        EXPECT_EQ(lower_add(lower_add(a, b), c), lower_add(a, lower_add(b, c)));
        EXPECT_EQ(upper_add(upper_add(a, b), c), upper_add(a, upper_add(b, c)));
        if (b <= c) {
          EXPECT_LE(lower_add(a, b), lower_add(a, c));
          EXPECT_LE(upper_add(a, b), upper_add(a, c));
        }
      }
    }
  }
}

TEST(ExtRealProperty, PartsDecompose) {
  for (const auto& a : value_grid()) {
    EXPECT_GE(pos_part(a), ExtReal(0));
    EXPECT_GE(neg_part(a), ExtReal(0));
    EXPECT_EQ(lower_add(pos_part(a), neg(neg_part(a))), a);
    EXPECT_EQ(upper_add(pos_part(a), neg(neg_part(a))), a);
  }
}
