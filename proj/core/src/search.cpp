#include "colred/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "colred/construction.hpp"

namespace colred {

namespace {

// Largest family count for which the pairwise (P2) table is built.
constexpr std::size_t kAdjacencyLimit = 20000;

void check_search_palette(int c) {
  if (c < 1 || c > kMaxSearchPalette) {
    throw std::invalid_argument("search palette " + std::to_string(c) + " outside [1, " +
                                std::to_string(kMaxSearchPalette) + "]");
  }
}

// Families over [c <= 5] as bitmasks over subset codes: bit s set iff subset s is present.
using FamilyBits = std::uint32_t;

FamilyBits to_bits(const Family& family) {
  FamilyBits bits = 0;
  for (Subset s : family.subsets()) {
    bits |= FamilyBits{1} << s.code();
  }
  return bits;
}

// disjoint[s]: the subset codes t with s & t == 0.
std::array<FamilyBits, 32> disjoint_table(int c) {
  std::array<FamilyBits, 32> disjoint{};
  const std::uint32_t codes = std::uint32_t{1} << c;
  for (std::uint32_t s = 1; s < codes; ++s) {
    for (std::uint32_t t = 1; t < codes; ++t) {
      if ((s & t) == 0) {
        disjoint[s] |= FamilyBits{1} << t;
      }
    }
  }
  return disjoint;
}

class Searcher {
 public:
  Searcher(int c, std::vector<Family> families, std::uint64_t budget)
      : c_(c), budget_(budget), families_(std::move(families)) {
    disjoint_ = disjoint_table(c);
    bits_.reserve(families_.size());
    for (const Family& family : families_) {
      bits_.push_back(to_bits(family));
    }
    // Pairwise (P2) table for the greedy colouring bound, only when it stays small.
    if (families_.size() <= kAdjacencyLimit) {
      words_ = (families_.size() + 63) / 64;
      adjacency_.assign(families_.size() * words_, 0);
      for (std::size_t i = 0; i < families_.size(); ++i) {
        for (std::size_t j = 0; j < families_.size(); ++j) {
          if (i != j && compatible_direct(i, j)) {
            adjacency_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
          }
        }
      }
    }
  }

  void seed(std::vector<Family> witness) {
    if (witness.size() > best_size_) {
      best_size_ = witness.size();
      best_ = std::move(witness);
    }
  }

  SearchResult run() {
    std::vector<std::uint32_t> all(families_.size());
    for (std::uint32_t i = 0; i < all.size(); ++i) {
      all[i] = i;
    }
    std::vector<std::uint32_t> chosen;
    extend(all, chosen);

    SearchResult result;
    result.c = c_;
    result.best_size = static_cast<int>(best_size_);
    result.exhaustive = !out_of_budget_;
    result.nodes = nodes_;
    if (!best_.empty()) {
      result.witness = Collection::from_families(c_, best_);
    }
    return result;
  }

 private:
  bool compatible_direct(std::size_t i, std::size_t j) const {
    FamilyBits reach = 0;
    for (FamilyBits rest = bits_[i]; rest != 0; rest &= rest - 1) {
      reach |= disjoint_[std::countr_zero(rest)];
    }
    return (reach & bits_[j]) != 0;
  }

  bool compatible(std::uint32_t i, std::uint32_t j) const {
    if (!adjacency_.empty()) {
      return ((adjacency_[i * words_ + j / 64] >> (j % 64)) & 1U) != 0;
    }
    return compatible_direct(i, j);
  }

  // Greedy partition of the candidates into classes of pairwise incompatible families;
  // a colourful extension takes at most one family per class.
  std::size_t colour_bound(const std::vector<std::uint32_t>& candidates) const {
    if (adjacency_.empty()) {
      return candidates.size();
    }
    std::vector<std::vector<std::uint32_t>> classes;
    for (std::uint32_t v : candidates) {
      bool placed = false;
      for (auto& cls : classes) {
        if (std::none_of(cls.begin(), cls.end(), [&](std::uint32_t u) { return compatible(u, v); })) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) {
        classes.push_back({v});
      }
    }
    return classes.size();
  }

  void extend(const std::vector<std::uint32_t>& candidates, std::vector<std::uint32_t>& chosen) {
    if (out_of_budget_) {
      return;
    }
    if (nodes_ == budget_) {
      out_of_budget_ = true;
      return;
    }
    ++nodes_;
    if (chosen.size() > best_size_) {
      best_size_ = chosen.size();
      best_.clear();
      for (std::uint32_t i : chosen) {
        best_.push_back(families_[i]);
      }
    }
    if (candidates.empty() || chosen.size() + candidates.size() <= best_size_) {
      return;
    }
    if (chosen.size() + colour_bound(candidates) <= best_size_) {
      return;
    }
    std::vector<std::uint32_t> next;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (out_of_budget_ || chosen.size() + (candidates.size() - i) <= best_size_) {
        return;
      }
      const std::uint32_t pick = candidates[i];
      next.clear();
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (compatible(pick, candidates[j])) {
          next.push_back(candidates[j]);
        }
      }
      chosen.push_back(pick);
      extend(next, chosen);
      chosen.pop_back();
    }
  }

  int c_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::array<FamilyBits, 32> disjoint_{};
  std::vector<Family> families_;
  std::vector<FamilyBits> bits_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adjacency_;
  std::size_t best_size_ = 0;
  std::vector<Family> best_;
};

}  // namespace

std::vector<Family> enumerate_p1_families(int c) {
  check_search_palette(c);
  const std::uint32_t codes = std::uint32_t{1} << c;
  std::vector<Family> out;
  std::vector<Subset> current;
  // Extend by subsets of increasing code that meet every subset already chosen.
  const auto grow = [&](auto&& self, std::uint32_t from) -> void {
    for (std::uint32_t s = from; s < codes; ++s) {
      const Subset next(s);
      if (std::all_of(current.begin(), current.end(), [next](Subset t) { return t.intersects(next); })) {
        current.push_back(next);
        out.emplace_back(current);
        self(self, s + 1);
        current.pop_back();
      }
    }
  };
  grow(grow, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Family> enumerate_maximal_p1_families(int c) {
  auto families = enumerate_p1_families(c);
  const auto disjoint = disjoint_table(c);
  const FamilyBits all_codes = static_cast<FamilyBits>((std::uint64_t{1} << (std::uint32_t{1} << c)) - 2);
  std::erase_if(families, [&](const Family& family) {
    // Codes meeting every member; maximal iff nothing outside the family qualifies.
    FamilyBits addable = all_codes;
    for (Subset s : family.subsets()) {
      addable &= ~disjoint[s.code()];
    }
    return (addable & ~to_bits(family)) != 0;
  });
  return families;
}

SearchResult max_colourful(int c, std::uint64_t budget, FamilyScope scope) {
  check_search_palette(c);
  auto families = enumerate_p1_families(c);
  bool maximal_only = scope == FamilyScope::maximal;
  if (scope == FamilyScope::automatic && families.size() > kAdjacencyLimit) {
    maximal_only = true;
  }
  if (maximal_only) {
    families = enumerate_maximal_p1_families(c);
  }
  Searcher searcher(c, std::move(families), budget);
  if (c >= 4) {
    const auto seed = construct(4);
    const auto seed_families = seed.families();
    searcher.seed(std::vector<Family>(seed_families.begin(), seed_families.end()));
  }
  SearchResult result = searcher.run();
  result.maximal_only = maximal_only;
  return result;
}

const char* to_string(Existence existence) {
  switch (existence) {
    case Existence::yes:
      return "yes";
    case Existence::no:
      return "no";
    case Existence::undecided:
      return "undecided";
  }
  return "undecided";
}

Existence exists_algorithm(const BigInt& k, int c, std::uint64_t budget) {
  const SearchResult result = max_colourful(c, budget);
  if (k <= result.best_size) {
    return Existence::yes;
  }
  return result.exhaustive ? Existence::no : Existence::undecided;
}

}  // namespace colred
