#include "colred/construction.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace colred {

namespace {

bool choice_bit(const std::vector<std::uint64_t>& words, std::size_t j) {
  return ((words[j / 64] >> (j % 64)) & 1U) != 0;
}

}  // namespace

std::vector<ComplementPair> pair_split(int c) {
  if (c < 2 || c % 2 != 0 || c > kMaxPalette) {
    throw std::invalid_argument("pair_split needs an even palette size in [2, " + std::to_string(kMaxPalette) +
                                "], got " + std::to_string(c));
  }
  const std::uint64_t limit = std::uint64_t{1} << c;
  std::vector<ComplementPair> out;
  // Masks with bit 0 set, popcount c/2, visited in increasing order.
  for (std::uint64_t mask = 1; mask < limit; mask += 2) {
    if (std::popcount(mask) == c / 2) {
      const Subset rep(static_cast<std::uint32_t>(mask));
      out.push_back({rep, rep.complement(c)});
    }
  }
  return out;
}

Construction::Construction(int c) : c_(c) {
  if (c % 2 != 0 || c < 4 || c > kMaxConstructPalette) {
    throw std::invalid_argument("construction needs an even palette size in [4, " +
                                std::to_string(kMaxConstructPalette) + "], got " + std::to_string(c));
  }
  pairs_ = pair_split(c);
  half_subset_count_ = binomial(static_cast<unsigned>(c), static_cast<unsigned>(c / 2));
  size_ = pow2(static_cast<unsigned>(pairs_.size())) + c;
  const Subset all = Subset::full(c);
  for (int colour = c; colour >= 1; --colour) {
    near_full_.push_back(Subset(all.mask() & ~Subset::singleton(colour).mask()));
  }
  std::sort(near_full_.begin(), near_full_.end());
  words_ = (pairs_.size() + 63) / 64;
}

Construction::Label Construction::label(const Colour& index) const {
  if (index < 1 || index > size_) {
    throw std::out_of_range("position " + to_decimal(index) + " outside [1, " + to_decimal(size_) + "]");
  }
  Label out;
  if (index <= c_) {
    out.singleton = index.convert_to<int>();
    return out;
  }
  out.choices = to_words(BigInt(index - c_ - 1), words_);
  return out;
}

Family Construction::family(const Label& label) const {
  if (label.singleton != 0) {
    return Family{Subset::singleton(label.singleton)};
  }
  std::vector<Subset> subsets;
  subsets.reserve(pairs_.size() + near_full_.size());
  for (std::size_t j = 0; j < pairs_.size(); ++j) {
    subsets.push_back(choice_bit(label.choices, j) ? pairs_[j].complement : pairs_[j].representative);
  }
  subsets.insert(subsets.end(), near_full_.begin(), near_full_.end());
  return Family(std::move(subsets));
}

std::pair<Subset, Subset> Construction::first_disjoint(const Label& lower, const Label& upper) const {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  // Smallest code in a choice family avoiding `colour`: chosen halves plus the one
  // (c-1)-subset that misses it.
  const auto first_avoiding = [&](const Label& choice, int colour) {
    std::uint32_t best = Subset::full(c_).mask() & ~Subset::singleton(colour).mask();
    for (std::size_t j = 0; j < pairs_.size(); ++j) {
      const Subset half = choice_bit(choice.choices, j) ? pairs_[j].complement : pairs_[j].representative;
      if (!half.contains(colour)) {
        best = std::min(best, half.mask());
      }
    }
    return Subset(best);
  };

  if (lower.singleton != 0 && upper.singleton != 0) {
    if (lower.singleton == upper.singleton) {
      throw std::logic_error("first_disjoint: identical labels");
    }
    return {Subset::singleton(lower.singleton), Subset::singleton(upper.singleton)};
  }
  if (lower.singleton != 0) {
    return {Subset::singleton(lower.singleton), first_avoiding(upper, lower.singleton)};
  }
  if (upper.singleton != 0) {
    return {first_avoiding(lower, upper.singleton), Subset::singleton(upper.singleton)};
  }

  // Two choice families: halves are disjoint only from their own complement, and
  // (c-1)-subsets only from singletons, so disjoint pairs sit on pairs chosen differently.
  std::uint32_t best = kNone;
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t diff = lower.choices[w] ^ upper.choices[w]; diff != 0; diff &= diff - 1) {
      const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(diff));
      const Subset half = choice_bit(lower.choices, j) ? pairs_[j].complement : pairs_[j].representative;
      best = std::min(best, half.mask());
    }
  }
  if (best == kNone) {
    throw std::logic_error("first_disjoint: identical labels");
  }
  const Subset p(best);
  return {p, p.complement(c_)};
}

Collection construct(int c, std::size_t materialization_bound) {
  return Collection::from_construction(std::make_shared<const Construction>(c), materialization_bound);
}

}  // namespace colred
