#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "colred/bigint.hpp"
#include "colred/subset.hpp"

namespace colred {

class Construction;

/// Collections larger than this are kept lazy (defined by rule, never materialized).
inline constexpr std::size_t kDefaultMaterializationBound = std::size_t{1} << 20;

/// Raised when an operation needs every family of a lazy collection.
class LazyCollectionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An ordered sequence of families over a target palette [c]. Index i (1-based) is the
/// family assigned to input colour i. Either explicit, or lazy and backed by a Construction.
class Collection {
 public:
  /// Explicit collection. Every subset must lie in [c]. Repeated families are accepted
  /// here and reported by is_colourful.
  static Collection from_families(int c, std::vector<Family> families);

  /// Collection defined by the explicit construction for even c >= 4; materialized when
  /// its size is at most `materialization_bound`.
  static Collection from_construction(std::shared_ptr<const Construction> construction,
                                      std::size_t materialization_bound = kDefaultMaterializationBound);

  int c() const noexcept { return c_; }
  const BigInt& size() const noexcept { return size_; }
  bool is_lazy() const noexcept { return families_ == nullptr; }
  /// Null for collections not produced by the construction.
  const Construction* construction() const noexcept { return construction_.get(); }

  /// Throws LazyCollectionError for lazy collections.
  std::span<const Family> families() const;

  /// Family of input colour `index`, 1 <= index <= size(). Throws std::out_of_range.
  Family family_at(const Colour& index) const;

  /// Compares as multisets of families. Both collections must be materialized.
  bool same_families(const Collection& other) const;

  /// One family per line in compact notation.
  std::string compact() const;

 private:
  Collection() = default;

  int c_ = 0;
  BigInt size_;
  std::shared_ptr<const std::vector<Family>> families_;
  std::shared_ptr<const Construction> construction_;
};

/// The four-family collection {1, 2, 3, 12 13 23} over [3].
Collection base_collection_c3();

/// Outcome of a colourfulness check. Indices are 1-based positions in the collection.
struct ColourfulReport {
  bool colourful = true;
  std::optional<BigInt> bad_family;                   // fails (P1)
  std::optional<std::pair<BigInt, BigInt>> bad_pair;  // fails (P2)
  std::string detail;

  explicit operator bool() const noexcept { return colourful; }
};

/// Full check of (P1) on every family and (P2) on every unordered pair of positions.
/// Throws LazyCollectionError for lazy collections; use verify_sampled instead.
ColourfulReport is_colourful(const Collection& collection);

/// Checks (P1) on `samples` random families and (P2) on `samples` random pairs of
/// distinct positions. Works on lazy collections.
ColourfulReport verify_sampled(const Collection& collection, std::size_t samples, std::uint64_t seed);

/// Uniform value in [0, bound) for bound >= 1.
BigInt random_below(const BigInt& bound, std::mt19937_64& rng);

}  // namespace colred
