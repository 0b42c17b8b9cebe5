#include <gtest/gtest.h>

#include "colred/subset.hpp"

namespace colred {
namespace {

TEST(SubsetTest, RejectsEmptyMask) {
  EXPECT_THROW(Subset(0), std::invalid_argument);
  EXPECT_THROW(Subset::of({}), std::invalid_argument);
}

TEST(SubsetTest, CodeIsMaskAndOrdersSubsets) {
  const Subset s12 = Subset::of({1, 2});
  const Subset s3 = Subset::of({3});
  EXPECT_EQ(s12.code(), 3U);
  EXPECT_EQ(s3.code(), 4U);
  EXPECT_LT(s12, s3);
  EXPECT_EQ(s12.size(), 2);
  EXPECT_EQ(s12.max_colour(), 2);
  EXPECT_EQ(s3.min_colour(), 3);
  EXPECT_TRUE(s12.contains(2));
  EXPECT_FALSE(s12.contains(3));
  EXPECT_FALSE(s12.contains(0));
}

TEST(SubsetTest, ComplementWithinPalette) {
  EXPECT_EQ(Subset::of({1, 2}).complement(4), Subset::of({3, 4}));
  EXPECT_THROW(Subset::full(3).complement(3), std::invalid_argument);
  EXPECT_FALSE(Subset::of({5}).within(4));
}

TEST(SubsetTest, CompactNotation) {
  EXPECT_EQ(Subset::of({1, 2, 3}).compact(), "123");
  EXPECT_EQ(Subset::of({1, 10}).compact(), "{1,10}");
}

TEST(FamilyTest, SortsAndCollapsesDuplicates) {
  const Family f{Subset::of({2, 3}), Subset::of({1, 2}), Subset::of({2, 3})};
  ASSERT_EQ(f.size(), 2U);
  EXPECT_EQ(f.subsets()[0], Subset::of({1, 2}));
  EXPECT_EQ(f.compact(), "12 23");
  EXPECT_THROW(Family(std::vector<Subset>{}), std::invalid_argument);
}

TEST(FamilyTest, OrdersBySizeThenCodes) {
  const Family one{Subset::of({2})};
  const Family two_low{Subset::of({1}), Subset::of({1, 2})};
  const Family two_high{Subset::of({2}), Subset::of({1, 2})};
  EXPECT_LT(one, two_low);
  EXPECT_LT(two_low, two_high);
}

TEST(CheckP1Test, Examples) {
  EXPECT_TRUE(check_p1(Family{Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3})}));
  EXPECT_TRUE(check_p1(Family{Subset::of({1})}));
  EXPECT_FALSE(check_p1(Family{Subset::of({1, 2}), Subset::of({3, 4})}));
}

TEST(CheckP2Test, Examples) {
  const Family f1{Subset::of({1})};
  const Family f2{Subset::of({2})};
  const Family triangle{Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3})};
  EXPECT_TRUE(check_p2(f1, f2));
  EXPECT_FALSE(check_p2(f1, f1));
  EXPECT_TRUE(check_p2(triangle, f1));
  EXPECT_TRUE(check_p2(f1, triangle));
}

}  // namespace
}  // namespace colred
