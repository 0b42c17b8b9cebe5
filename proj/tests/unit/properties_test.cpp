#include <gtest/gtest.h>

#include <array>
#include <random>

#include "colred/colred.hpp"
#include "oracles.hpp"

namespace colred {
namespace {

// Uniform colours in [k] with both neighbours different from y.
std::array<BigInt, 3> random_triple(const BigInt& k, std::mt19937_64& rng) {
  BigInt y = random_below(k, rng) + 1;
  BigInt x;
  BigInt z;
  do {
    x = random_below(k, rng) + 1;
  } while (x == y);
  do {
    z = random_below(k, rng) + 1;
  } while (z == y);
  return {x, y, z};
}

TEST(FastPathProperty, MatchesGenericScanAtSixColours) {
  const Collection lazy = construct(6);
  ASSERT_NE(lazy.construction(), nullptr);
  const Construction& rule = *lazy.construction();
  const int k = static_cast<int>(rule.size());
  std::vector<Family> families;
  for (int i = 1; i <= k; ++i) {
    families.push_back(rule.family_at(i));
  }
  for (int x = 1; x <= k; ++x) {
    for (int y = x + 1; y <= k; ++y) {
      const auto fast = rule.first_disjoint(rule.label(x), rule.label(y));
      const auto scanned = first_disjoint_pair(families[x - 1], families[y - 1]);
      ASSERT_TRUE(scanned.has_value());
      ASSERT_EQ(fast, *scanned) << x << ", " << y;
    }
  }
}

TEST(SymmetryProperty, ConstructTwelveRandomTriples) {
  const ImplicitAlgorithm alg(construct(12));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto [x, y, z] = random_triple(alg.input_palette(), rng);
    const int forward = alg.new_colour(x, y, z);
    ASSERT_EQ(forward, alg.new_colour(z, y, x));
    ASSERT_GE(forward, 1);
    ASSERT_LE(forward, 12);
  }
}

TEST(FixedColourProperty, SmallColoursAreKept) {
  std::mt19937_64 rng(23);
  for (int c : {4, 6, 12}) {
    const ImplicitAlgorithm alg(construct(c));
    for (int trial = 0; trial < 500; ++trial) {
      const BigInt y = random_below(c, rng) + 1;
      BigInt x;
      BigInt z;
      do {
        x = random_below(alg.input_palette(), rng) + 1;
      } while (x == y);
      do {
        z = random_below(alg.input_palette(), rng) + 1;
      } while (z == y);
      ASSERT_EQ(alg.new_colour(x, y, z), y) << "c=" << c;
    }
  }
  const ImplicitAlgorithm base(base_collection_c3());
  for (int y = 1; y <= 3; ++y) {
    for (int x = 1; x <= 4; ++x) {
      for (int z = 1; z <= 4; ++z) {
        if (x != y && z != y) {
          ASSERT_EQ(base.new_colour(x, y, z), y);
        }
      }
    }
  }
}

TEST(StepProperty, RandomPathsStayProper) {
  const ImplicitAlgorithm alg(construct(12));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Topology topology = seed % 2 == 0 ? Topology::path : Topology::cycle;
    const ColouredGraph g = random_proper(topology, 200, alg.input_palette(), seed);
    const ColouredGraph out = step(g, alg);
    ASSERT_TRUE(oracle::proper(out.colours, topology == Topology::cycle)) << "seed " << seed;
    ASSERT_TRUE(validate(out).empty());
    ASSERT_EQ(out.k, 12);
  }
}

TEST(StepProperty, TabulatedAndImplicitAgree) {
  const ImplicitAlgorithm alg(construct(4));
  const AlgorithmTable table = tabulate(alg, 12);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ColouredGraph g = random_proper(Topology::cycle, 101, 12, seed);
    ASSERT_EQ(step(g, alg), step(g, table));
  }
}

TEST(ColeVishkinProperty, OutputFitsAndIsProper) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ColouredGraph g = random_distinct(Topology::path, 500, 65536, seed);
    g.oriented = true;
    const ColouredGraph out = cole_vishkin_step(g, 16);
    ASSERT_TRUE(validate(out).empty());
    for (const Colour& c : out.colours) {
      ASSERT_LE(c, 32);
    }
  }
}

TEST(DeterminismProperty, SameSeedSameResult) {
  EXPECT_EQ(random_distinct(Topology::cycle, 100, parse_big("10^100"), 5),
            random_distinct(Topology::cycle, 100, parse_big("10^100"), 5));
  EXPECT_NE(random_distinct(Topology::cycle, 100, parse_big("10^100"), 5),
            random_distinct(Topology::cycle, 100, parse_big("10^100"), 6));
  const SearchResult a = max_colourful(3);
  const SearchResult b = max_colourful(3);
  EXPECT_EQ(a.nodes, b.nodes);
  EXPECT_TRUE(a.witness->same_families(*b.witness));
}

TEST(SampledVerification, ConstructionsPass) {
  for (int c : {4, 6, 8, 12, 16}) {
    EXPECT_TRUE(verify_sampled(construct(c), 200, 1)) << "c=" << c;
  }
  const Collection bad = Collection::from_families(2, {Family{Subset::of({1})}, Family{Subset::of({1})}});
  EXPECT_FALSE(verify_sampled(bad, 50, 1));
}

}  // namespace
}  // namespace colred
