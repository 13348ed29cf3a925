#include <gtest/gtest.h>

#include "interlab/error.hpp"
#include "interlab/measure_space.hpp"

using namespace interlab;

TEST(MeasureSpace, Validates) {
  EXPECT_THROW(MeasureSpace({}, {}), InputError);
  EXPECT_THROW(MeasureSpace({"a", "b"}, {Scalar(1)}), InputError);
  EXPECT_THROW(MeasureSpace({"a", "a"}, {Scalar(1), Scalar(1)}), InputError);
  EXPECT_THROW(MeasureSpace({"a"}, {Scalar(-1)}), InputError);
}

TEST(MeasureSpace, Basics) {
  auto s = MeasureSpace::make({Scalar::ratio(1, 2), Scalar(0), Scalar::ratio(1, 2)});
  EXPECT_EQ(s->size(), 3u);
  EXPECT_EQ(s->atom(1), "w1");
  EXPECT_TRUE(s->is_null_atom(1));
  EXPECT_TRUE(s->is_probability());
  EXPECT_EQ(s->index_of("w2"), 2u);
  EXPECT_THROW(s->index_of("zz"), InputError);
}

TEST(AtomSet, MeasureAndNull) {
  MeasureSpace s({"a", "b", "c"}, {Scalar(1), Scalar(0), Scalar(2)});
  AtomSet ab = AtomSet::of(s, {"a", "b"});
  EXPECT_EQ(ab.mask(), 3u);
  EXPECT_EQ(measure(s, ab), ExtReal(1));
  EXPECT_TRUE(is_null(s, AtomSet::of(s, {"b"})));
  EXPECT_FALSE(is_null(s, ab));
  EXPECT_EQ(measure(s, AtomSet::all(3)), ExtReal(3));
  EXPECT_EQ(AtomSet::from_mask(3, 5), AtomSet::of(s, {"a", "c"}));
}
