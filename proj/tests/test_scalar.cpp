#include <gtest/gtest.h>

#include "interlab/error.hpp"
#include "interlab/scalar.hpp"

using interlab::Scalar;

TEST(Scalar, ParsesDecimalsExactly) {
  EXPECT_EQ(Scalar::parse("0.1") * Scalar(10), Scalar(1));
  EXPECT_EQ(Scalar::parse("-2.5"), Scalar::ratio(-5, 2));
  EXPECT_EQ(Scalar::parse("1e-3"), Scalar::ratio(1, 1000));
  EXPECT_EQ(Scalar::parse("1e+09"), Scalar(1000000000));
  EXPECT_EQ(Scalar::parse("3/6"), Scalar::ratio(1, 2));
  EXPECT_TRUE(Scalar::parse("1/3").is_exact());
}

TEST(Scalar, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1..2", "1/0", "--1", "1e", "nan"}) {
    EXPECT_THROW(Scalar::parse(bad), interlab::InputError) << bad;
  }
}

TEST(Scalar, ExactArithmeticStaysExact) {
  Scalar third = Scalar::ratio(1, 3);
  EXPECT_EQ(third + third + third, Scalar(1));
  EXPECT_TRUE((third * Scalar(3)).is_exact());
  EXPECT_EQ(third.to_string(), "1/3");
}

TEST(Scalar, DoubleOperandMakesDouble) {
  Scalar d = Scalar::from_double(0.5);
  EXPECT_FALSE((d + Scalar(1)).is_exact());
  EXPECT_EQ((d + Scalar(1)).to_double(), 1.5);
  EXPECT_THROW(Scalar::from_double(std::numeric_limits<double>::quiet_NaN()), interlab::DomainError);
}

TEST(Scalar, DivisionByZeroIsDomainError) { EXPECT_THROW(Scalar(1) / Scalar(0), interlab::DomainError); }

TEST(Scalar, ToDoubleRoundsToNearest) {
  EXPECT_EQ(Scalar::parse("1e-9").to_double(), 1e-9);
  EXPECT_EQ(Scalar::parse("0.1").to_double(), 0.1);
  EXPECT_EQ(Scalar::ratio(1, 3).to_double(), 1.0 / 3.0);
}

TEST(Scalar, MixedComparison) {
  EXPECT_LT(Scalar::ratio(1, 3), Scalar::from_double(0.34));
  EXPECT_GT(Scalar::ratio(1, 3), Scalar::from_double(0.33));
}

TEST(Scalar, Pow) {
  EXPECT_EQ(interlab::pow(Scalar::ratio(2, 3), Scalar(2)), Scalar::ratio(4, 9));
  EXPECT_NEAR(interlab::pow(Scalar(2), Scalar::ratio(1, 2)).to_double(), 1.41421356, 1e-8);
}

TEST(Scalar, FloatBackingStoresDoubles) {
  interlab::set_backing(interlab::Backing::kFloat);
  Scalar s = Scalar::ratio(1, 4);
  Scalar p = Scalar::parse("0.1");
  interlab::set_backing(interlab::Backing::kRational);
  EXPECT_FALSE(s.is_exact());
  EXPECT_EQ(s.to_double(), 0.25);
  EXPECT_EQ(p.to_double(), 0.1);
}
