#include <gtest/gtest.h>

#include "colred/collection.hpp"
#include "colred/construction.hpp"
#include "oracles.hpp"

namespace colred {
namespace {

TEST(BaseCollectionTest, MatchesTheFourFamilyExample) {
  const Collection a = base_collection_c3();
  EXPECT_EQ(a.c(), 3);
  EXPECT_EQ(a.size(), 4);
  EXPECT_FALSE(a.is_lazy());
  EXPECT_EQ(a.family_at(4), (Family{Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3})}));
  EXPECT_TRUE(is_colourful(a));
  EXPECT_EQ(a.compact(), "1\n2\n3\n12 13 23\n");
}

TEST(CollectionTest, RejectsSubsetsOutsidePalette) {
  EXPECT_THROW(Collection::from_families(2, {Family{Subset::of({3})}}), std::invalid_argument);
  EXPECT_THROW(Collection::from_families(0, {}), std::invalid_argument);
}

TEST(CollectionTest, FamilyAtChecksRange) {
  const Collection a = base_collection_c3();
  EXPECT_THROW(a.family_at(0), std::out_of_range);
  EXPECT_THROW(a.family_at(5), std::out_of_range);
}

TEST(IsColourfulTest, RepeatedFamilyViolatesP2) {
  const Collection a = Collection::from_families(3, {Family{Subset::of({1})}, Family{Subset::of({2})},
                                                     Family{Subset::of({1})}});
  const ColourfulReport report = is_colourful(a);
  EXPECT_FALSE(report);
  ASSERT_TRUE(report.bad_pair.has_value());
  EXPECT_EQ(report.bad_pair->first, 1);
  EXPECT_EQ(report.bad_pair->second, 3);
}

TEST(IsColourfulTest, ReportsFirstFamilyFailingP1) {
  const Collection a = Collection::from_families(
      4, {Family{Subset::of({1})}, Family{Subset::of({1, 2}), Subset::of({3, 4})}, Family{Subset::of({3}), Subset::of({4})}});
  const ColourfulReport report = is_colourful(a);
  EXPECT_FALSE(report);
  ASSERT_TRUE(report.bad_family.has_value());
  EXPECT_EQ(*report.bad_family, 2);
}

TEST(IsColourfulTest, RefusesLazyCollections) {
  const Collection lazy = construct(8);
  ASSERT_TRUE(lazy.is_lazy());
  EXPECT_THROW(is_colourful(lazy), LazyCollectionError);
  EXPECT_THROW(lazy.families(), LazyCollectionError);
}

TEST(IsColourfulTest, MaterializationBoundIsConfigurable) {
  EXPECT_TRUE(construct(4, 11).is_lazy());
  EXPECT_FALSE(construct(4, 12).is_lazy());
}

TEST(VerifySampledTest, AcceptsConstructionAndCatchesBrokenCollection) {
  EXPECT_TRUE(verify_sampled(construct(8), 300, 5));
  EXPECT_TRUE(verify_sampled(construct(12), 50, 5));
  const Collection broken = Collection::from_families(2, {Family{Subset::of({1})}, Family{Subset::of({1})}});
  EXPECT_FALSE(verify_sampled(broken, 50, 1));
}

TEST(RandomBelowTest, StaysInRangeAndCoversSmallRanges) {
  std::mt19937_64 rng(3);
  std::set<int> seen;
  for (int i = 0; i < 2000; ++i) {
    const BigInt v = random_below(7, rng);
    ASSERT_GE(v, 0);
    ASSERT_LT(v, 7);
    seen.insert(v.convert_to<int>());
  }
  EXPECT_EQ(seen.size(), 7U);
  const BigInt huge = parse_big("10^100");
  for (int i = 0; i < 100; ++i) {
    ASSERT_LT(random_below(huge, rng), huge);
  }
  EXPECT_THROW(random_below(0, rng), std::invalid_argument);
}

TEST(SameFamiliesTest, IgnoresOrder) {
  const Collection a = base_collection_c3();
  const Collection b = Collection::from_families(
      3, {Family{Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3})}, Family{Subset::of({3})},
          Family{Subset::of({1})}, Family{Subset::of({2})}});
  EXPECT_TRUE(a.same_families(b));
  EXPECT_FALSE(a.same_families(Collection::from_families(3, {Family{Subset::of({1})}})));
}

TEST(BigIntTest, ParsesDecimalAndPowers) {
  EXPECT_EQ(parse_big("12"), 12);
  EXPECT_EQ(parse_big("2^10"), 1024);
  EXPECT_EQ(to_decimal(parse_big("10^3")), "1000");
  EXPECT_THROW(parse_big(""), std::invalid_argument);
  EXPECT_THROW(parse_big("-3"), std::invalid_argument);
  EXPECT_THROW(parse_big("1e5"), std::invalid_argument);
  EXPECT_EQ(bit_length(parse_big("2^462")), 463U);
  EXPECT_EQ(binomial(12, 6), 924);
}

}  // namespace
}  // namespace colred
