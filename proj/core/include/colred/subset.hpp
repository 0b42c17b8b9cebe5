#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace colred {

/// Largest target palette c representable by a Subset mask.
inline constexpr int kMaxPalette = 32;

/// Non-empty subset of a target palette [c]. Bit i-1 of the mask stands for colour i;
/// the mask read as an integer is the subset's code and defines its order.
class Subset {
 public:
  /// Throws std::invalid_argument on an empty mask.
  explicit Subset(std::uint32_t mask);

  static Subset of(std::initializer_list<int> colours);
  static Subset of(std::span<const int> colours);
  static Subset singleton(int colour);
  /// All of [c].
  static Subset full(int c);

  std::uint32_t mask() const noexcept { return mask_; }
  std::uint32_t code() const noexcept { return mask_; }
  int size() const noexcept;
  /// Largest colour contained.
  int max_colour() const noexcept;
  /// Smallest colour contained.
  int min_colour() const noexcept;
  bool contains(int colour) const noexcept;
  bool intersects(Subset other) const noexcept { return (mask_ & other.mask_) != 0; }
  /// True iff every colour is in [c].
  bool within(int c) const noexcept;

  /// [c] minus this subset; throws if that is empty.
  Subset complement(int c) const;

  /// Colours in increasing order.
  std::vector<int> colours() const;

  /// Compact form: "123" when all colours are single digits, "{1,10}" otherwise.
  std::string compact() const;

  friend bool operator==(Subset, Subset) = default;
  friend std::strong_ordering operator<=>(Subset a, Subset b) { return a.mask_ <=> b.mask_; }

 private:
  std::uint32_t mask_;
};

/// A non-empty set of subsets, stored sorted by code without duplicates.
/// Families order first by the number of subsets, then lexicographically by codes.
class Family {
 public:
  /// Sorts and collapses duplicates. Throws std::invalid_argument when empty.
  explicit Family(std::vector<Subset> subsets);
  Family(std::initializer_list<Subset> subsets);

  std::span<const Subset> subsets() const noexcept { return subsets_; }
  std::size_t size() const noexcept { return subsets_.size(); }
  bool contains(Subset subset) const noexcept;
  /// Largest colour used by any subset.
  int max_colour() const noexcept;

  /// Subsets in compact form, separated by single spaces, e.g. "12 13 23".
  std::string compact() const;

  friend bool operator==(const Family&, const Family&) = default;
  friend std::strong_ordering operator<=>(const Family& a, const Family& b);

 private:
  std::vector<Subset> subsets_;
};

/// (P1): every two subsets of the family intersect, a subset with itself included.
bool check_p1(const Family& family) noexcept;

/// (P2): some subset of `a` is disjoint from some subset of `b`.
bool check_p2(const Family& a, const Family& b) noexcept;

}  // namespace colred
