#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colred/collection.hpp"

namespace colred {

/// Largest palette the search enumerates families for (1,314,815 intersecting families at c = 5).
inline constexpr int kMaxSearchPalette = 5;

/// Default number of partial collections the search may expand.
inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

struct SearchResult {
  int c = 0;
  int best_size = 0;
  std::optional<Collection> witness;  // colourful, of size best_size
  bool exhaustive = false;            // false: best_size is only a lower bound
  bool maximal_only = false;          // searched over maximal (P1) families only
  std::uint64_t nodes = 0;            // partial collections expanded
};

/// Which (P1) families the search branches over.
///
/// Restricting to inclusion-maximal intersecting families loses nothing: enlarging each
/// family of a colourful collection to a maximal one keeps (P1), keeps every disjoint pair
/// behind (P2), and keeps families distinct, since equal enlargements would need a disjoint
/// pair inside one intersecting family.
enum class FamilyScope {
  automatic,  // all families when the pairwise table fits, maximal ones otherwise (c = 5)
  all,
  maximal,
};

/// Every family of non-empty subsets of [c] satisfying (P1), ordered by size and then
/// lexicographically by subset codes. Throws std::invalid_argument for c outside [1, 5].
std::vector<Family> enumerate_p1_families(int c);

/// The inclusion-maximal families among enumerate_p1_families(c), in the same order.
std::vector<Family> enumerate_maximal_p1_families(int c);

/// Largest colourful collection over [c] by depth-first branch and bound over the (P1)
/// families in canonical order; extensions are strictly increasing in that order and must
/// satisfy (P2) against every chosen family. A greedy partition into pairwise incompatible
/// classes bounds each branch. For c >= 4 the construct(4) collection seeds the lower bound.
/// Stops after `budget` expansions with exhaustive = false.
SearchResult max_colourful(int c, std::uint64_t budget = kDefaultSearchBudget,
                           FamilyScope scope = FamilyScope::automatic);

enum class Existence { yes, no, undecided };

const char* to_string(Existence existence);

/// Whether a symmetric one-round k -> c algorithm exists, via the size of the largest
/// colourful collection over [c]. `undecided` when the search ran out of budget below k.
Existence exists_algorithm(const BigInt& k, int c, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace colred
