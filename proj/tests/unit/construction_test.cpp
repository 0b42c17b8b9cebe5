#include <gtest/gtest.h>

#include "colred/construction.hpp"
#include "oracles.hpp"

namespace colred {
namespace {

TEST(PairSplitTest, FourColours) {
  const std::vector<ComplementPair> expected{{Subset::of({1, 2}), Subset::of({3, 4})},
                                             {Subset::of({1, 3}), Subset::of({2, 4})},
                                             {Subset::of({1, 4}), Subset::of({2, 3})}};
  EXPECT_EQ(pair_split(4), expected);
}

TEST(PairSplitTest, TwoColours) {
  const std::vector<ComplementPair> expected{{Subset::of({1}), Subset::of({2})}};
  EXPECT_EQ(pair_split(2), expected);
}

TEST(PairSplitTest, CountMatchesEnumeratedHalves) {
  for (int c : {2, 4, 6, 8, 10, 12}) {
    // Oracle: every c/2-subset, enumerated directly, each appearing exactly once in the split.
    const auto halves = oracle::subsets_of_size(c, c / 2);
    const auto pairs = pair_split(c);
    ASSERT_EQ(pairs.size() * 2, halves.size()) << "c=" << c;
    std::multiset<oracle::NaiveSubset> covered;
    for (const auto& pair : pairs) {
      EXPECT_TRUE(pair.representative.contains(1));
      EXPECT_EQ(pair.representative.mask() | pair.complement.mask(), Subset::full(c).mask());
      EXPECT_EQ(pair.representative.mask() & pair.complement.mask(), 0U);
      covered.insert(oracle::to_naive(pair.representative));
      covered.insert(oracle::to_naive(pair.complement));
    }
    EXPECT_EQ(covered, std::multiset<oracle::NaiveSubset>(halves.begin(), halves.end()));
    for (std::size_t j = 1; j < pairs.size(); ++j) {
      EXPECT_LT(pairs[j - 1].representative, pairs[j].representative);
    }
  }
  EXPECT_EQ(pair_split(6).size(), 10U);
}

TEST(PairSplitTest, RejectsOddOrNonPositive) {
  EXPECT_THROW(pair_split(3), std::invalid_argument);
  EXPECT_THROW(pair_split(0), std::invalid_argument);
  EXPECT_THROW(pair_split(-2), std::invalid_argument);
}

TEST(ConstructTest, RejectsBadPalettes) {
  EXPECT_THROW(construct(3), std::invalid_argument);
  EXPECT_THROW(construct(2), std::invalid_argument);
  EXPECT_THROW(construct(0), std::invalid_argument);
  EXPECT_THROW(construct(18), std::invalid_argument);
}

TEST(ConstructTest, FourColoursMatchesListedFamilies) {
  const Collection a = construct(4);
  ASSERT_EQ(a.size(), 12);
  std::set<oracle::NaiveFamily> got;
  for (const Family& f : a.families()) {
    got.insert(oracle::to_naive(f));
  }
  std::set<oracle::NaiveFamily> expected;
  for (const char* line : {"12 13 14 123 124 134 234", "12 13 23 123 124 134 234", "12 24 14 123 124 134 234",
                           "12 24 23 123 124 134 234", "34 13 14 123 124 134 234", "34 13 23 123 124 134 234",
                           "34 24 14 123 124 134 234", "34 24 23 123 124 134 234", "1", "2", "3", "4"}) {
    expected.insert(oracle::parse_family(line));
  }
  EXPECT_EQ(got, expected);
  EXPECT_TRUE(is_colourful(a));
}

TEST(ConstructTest, SizeFormulaExact) {
  for (int c : {4, 6, 8, 10, 12, 14, 16}) {
    const Collection a = construct(c);
    const BigInt s = binomial(static_cast<unsigned>(c), static_cast<unsigned>(c / 2));
    EXPECT_EQ(a.construction()->half_subset_count(), s);
    EXPECT_EQ(a.size(), pow2((s / 2).convert_to<unsigned>()) + c) << "c=" << c;
  }
  EXPECT_EQ(construct(12).size(), pow2(462) + 12);
  EXPECT_TRUE(construct(12).is_lazy());
}

TEST(FamilyFromIndexTest, Examples) {
  const Collection a = construct(4);
  EXPECT_EQ(a.family_at(3), Family{Subset::of({3})});
  EXPECT_EQ(oracle::to_naive(a.family_at(5)), oracle::parse_family("12 13 14 123 124 134 234"));
  EXPECT_EQ(oracle::to_naive(a.family_at(6)), oracle::parse_family("34 13 14 123 124 134 234"));
  EXPECT_THROW(a.family_at(13), std::out_of_range);
  EXPECT_THROW(a.family_at(0), std::out_of_range);
}

TEST(FamilyFromIndexTest, AgreesWithOracleForSmallPalettes) {
  for (int c : {4, 6}) {
    const Collection a = construct(c);
    const auto n = a.size().convert_to<std::uint64_t>();
    for (std::uint64_t i = 1; i <= n; ++i) {
      ASSERT_EQ(oracle::to_naive(a.family_at(i)), oracle::construct_family(c, i)) << "c=" << c << " i=" << i;
    }
  }
}

TEST(FamilyFromIndexTest, LazyIndexingUsesBitsOfTheOffset) {
  const Collection a = construct(12);
  const Construction& scheme = *a.construction();
  // Offset with only bit j set flips pair j to its complement.
  for (unsigned j : {0U, 1U, 63U, 64U, 200U, 461U}) {
    const Family f = a.family_at(pow2(j) + 13);
    EXPECT_EQ(f.size(), 462U + 12U);
    for (std::size_t p = 0; p < scheme.pairs().size(); ++p) {
      const auto& pair = scheme.pairs()[p];
      ASSERT_TRUE(f.contains(p == j ? pair.complement : pair.representative));
      ASSERT_FALSE(f.contains(p == j ? pair.representative : pair.complement));
    }
  }
  const Family last = a.family_at(a.size());
  for (const auto& pair : scheme.pairs()) {
    EXPECT_TRUE(last.contains(pair.complement));
  }
}

TEST(FamilyFromIndexTest, InjectiveOnSmallConstructions) {
  for (int c : {4, 6}) {
    const Collection a = construct(c);
    std::vector<Family> families(a.families().begin(), a.families().end());
    std::sort(families.begin(), families.end());
    EXPECT_EQ(std::adjacent_find(families.begin(), families.end()), families.end()) << "c=" << c;
  }
}

TEST(ConstructTest, SixColoursFullyColourful) {
  const Collection a = construct(6);
  ASSERT_FALSE(a.is_lazy());
  EXPECT_EQ(a.size(), 1030);
  EXPECT_TRUE(is_colourful(a));
}

TEST(ConstructTest, EightColoursSampled) {
  const Collection a = construct(8);
  const Construction& scheme = *a.construction();
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const BigInt i = random_below(a.size(), rng) + 1;
    ASSERT_TRUE(check_p1(a.family_at(i))) << to_decimal(i);
  }
  EXPECT_TRUE(verify_sampled(a, 500, 17));
  EXPECT_EQ(scheme.near_full().size(), 8U);
}

TEST(ConstructionTest, LabelOfSingletonsAndChoices) {
  const Construction scheme(4);
  EXPECT_EQ(scheme.label(2).singleton, 2);
  const auto label = scheme.label(6);
  EXPECT_EQ(label.singleton, 0);
  ASSERT_EQ(label.choices.size(), 1U);
  EXPECT_EQ(label.choices[0], 1U);
  EXPECT_THROW(scheme.label(13), std::out_of_range);
}

}  // namespace
}  // namespace colred
