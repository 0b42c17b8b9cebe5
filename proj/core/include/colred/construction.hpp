#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "colred/bigint.hpp"
#include "colred/collection.hpp"
#include "colred/subset.hpp"

namespace colred {

/// Largest target palette accepted by the construction. C(16, 8)/2 = 6435 pairs.
inline constexpr int kMaxConstructPalette = 16;

/// A c/2-subset containing colour 1 together with its complement.
struct ComplementPair {
  Subset representative;
  Subset complement;

  friend bool operator==(const ComplementPair&, const ComplementPair&) = default;
};

/// All C(c, c/2)/2 complement pairs of [c], ascending by representative code.
/// Requires c even, 2 <= c <= kMaxPalette.
std::vector<ComplementPair> pair_split(int c);

/// The explicit colourful collection of size 2^(s/2) + c over an even palette [c], c >= 4,
/// with s = C(c, c/2). Positions 1..c are the singleton families {{i}}. Position c + 1 + o
/// picks, for pair j, the representative when bit j of o is 0 and the complement when it is
/// 1, and adds every (c-1)-subset of [c].
class Construction {
 public:
  /// Throws std::invalid_argument unless c is even and 4 <= c <= kMaxConstructPalette.
  explicit Construction(int c);

  /// Per-node label: either a singleton colour, or the pair-choice bits of a position past c.
  struct Label {
    int singleton = 0;                  // 1..c, or 0 for the choice families
    std::vector<std::uint64_t> choices; // bit j set: pair j contributes its complement
  };

  int c() const noexcept { return c_; }
  /// s = C(c, c/2).
  const BigInt& half_subset_count() const noexcept { return half_subset_count_; }
  /// 2^(s/2) + c.
  const BigInt& size() const noexcept { return size_; }
  std::span<const ComplementPair> pairs() const noexcept { return pairs_; }
  /// Every (c-1)-subset of [c], ascending by code.
  std::span<const Subset> near_full() const noexcept { return near_full_; }

  /// Label of position `index`, 1 <= index <= size(). Throws std::out_of_range.
  Label label(const Colour& index) const;
  Family family(const Label& label) const;
  Family family_at(const Colour& index) const { return family(label(index)); }

  /// The first disjoint pair (P, Q) with P in the family of `lower` and Q in the family of
  /// `upper`, scanning P by code and then Q by code. `lower` must belong to the smaller
  /// position. Runs in O(s) without materializing either family.
  std::pair<Subset, Subset> first_disjoint(const Label& lower, const Label& upper) const;

 private:
  int c_;
  BigInt half_subset_count_;
  BigInt size_;
  std::vector<ComplementPair> pairs_;
  std::vector<Subset> near_full_;
  std::size_t words_;
};

/// construct(c): collection backed by a Construction, materialized up to the bound.
Collection construct(int c, std::size_t materialization_bound = kDefaultMaterializationBound);

}  // namespace colred
