#include <gtest/gtest.h>

#include "schmidt/diamond.hpp"
#include "schmidt/enumerate.hpp"
#include "schmidt/errors.hpp"

using namespace schmidt;

namespace {

Overpartition op(std::vector<Int> parts, std::vector<bool> marks = {}) {
  if (marks.empty()) marks.assign(parts.size(), false);
  return Overpartition(std::move(parts), std::move(marks));
}

const std::vector<Int> kExample{37, 34, 31, 22, 23, 22, 20, 20, 19, 17, 11, 9, 11, 5, 8, 3, 3, 1, 0, 0, 0};

OverpartitionTuple example_tuple() {
  return {op({5, 2}), op({7, 4, 4, 2}, {false, false, true, false}), op({11, 3, 2, 1}), op({6, 5, 3}, {true, false, true}),
          op({8, 8, 2})};
}

}  // namespace

TEST(Diamond, StatsExamples) {
  EXPECT_EQ(validate_diamond(std::vector<Int>{1, 0, 0, 0}, 1), (DiamondStats{1, 1, 1}));
  EXPECT_EQ(validate_diamond(std::vector<Int>{1, 0, 1, 0}, 1), (DiamondStats{1, 1, 2}));
  EXPECT_EQ(validate_diamond(kExample, 2), (DiamondStats{4, 73, 18}));
}

TEST(Diamond, RejectsBrokenChains) {
  EXPECT_THROW(validate_diamond(std::vector<Int>{1, 2, 0, 0}, 1), DomainError);  // 1 below 2
  EXPECT_THROW(validate_diamond(std::vector<Int>{1, 0, 0, 1}, 1), DomainError);  // terminal not 0
  EXPECT_THROW(validate_diamond(std::vector<Int>{1, 0, 0}, 1), DomainError);     // bad length
  EXPECT_THROW(validate_diamond(std::vector<Int>{1, -1, 0, 0}, 1), DomainError);
  EXPECT_THROW(validate_diamond(std::vector<Int>{1, 0, 0, 0, 0, 0, 0}, 1), DomainError);  // zero last head
}

TEST(Diamond, TupleToDiamondExample) {
  const Diamond d = tuple_to_diamond(example_tuple(), 2);
  EXPECT_EQ(d.entries(), kExample);
  EXPECT_EQ(d.length(), 4u);
  EXPECT_EQ(d.weight(), 73);
  EXPECT_EQ(d.stats().nonzero_count, 18u);
}

TEST(Diamond, DiamondToTupleExample) { EXPECT_EQ(diamond_to_tuple(Diamond(2, kExample)), example_tuple()); }

TEST(Diamond, SmallForward) {
  EXPECT_EQ(tuple_to_diamond(OverpartitionTuple{op({1}), op({}), op({})}, 1).entries(), (std::vector<Int>{1, 0, 0, 0}));
  EXPECT_EQ(tuple_to_diamond(OverpartitionTuple{op({}), op({1}, {true}), op({})}, 1).entries(),
            (std::vector<Int>{1, 0, 1, 0}));
}

TEST(Diamond, SmallBackward) {
  EXPECT_EQ(diamond_to_tuple(Diamond(1, {1, 0, 1, 0})), (OverpartitionTuple{op({}), op({1}, {true}), op({})}));
  const auto tp = diamond_to_tuple(Diamond(1, {1, 1, 1, 0}));
  EXPECT_EQ(tp, (OverpartitionTuple{op({}), op({}), op({1})}));
  EXPECT_EQ(tuple_to_diamond(tp, 1).entries(), (std::vector<Int>{1, 1, 1, 0}));
}

TEST(Diamond, RejectsMarksInOddSlots) {
  EXPECT_THROW(tuple_to_diamond(OverpartitionTuple{op({1}, {true}), op({}), op({})}, 1), DomainError);
  EXPECT_THROW(tuple_to_diamond(OverpartitionTuple{op({1}), op({})}, 1), DimensionError);
}

TEST(Diamond, WeightZeroIsTheSingleZero) {
  EXPECT_EQ(diamonds(0, 1).size(), 1u);
  EXPECT_EQ(diamonds(0, 1)[0].entries(), (std::vector<Int>{0, 0, 0, 0}));
  EXPECT_THROW(diamond_to_tuple(Diamond(1, {0, 0, 0, 0})), DomainError);
  EXPECT_THROW(Diamond(1, {0}), DomainError);
}

TEST(Diamond, RoundTripsOnEnumeratedDomains) {
  for (int k = 1; k <= 2; ++k) {
    for (Int n = 1; n <= 6; ++n) {
      for (const auto& d : diamonds(n, k)) ASSERT_EQ(tuple_to_diamond(diamond_to_tuple(d), k), d);
      for (const auto& tp : diamond_tuples(n, k)) ASSERT_EQ(diamond_to_tuple(tuple_to_diamond(tp, k)), tp);
    }
  }
}
