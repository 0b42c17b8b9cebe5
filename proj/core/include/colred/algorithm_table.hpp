#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "colred/collection.hpp"

namespace colred {

/// Largest input palette a table may have (k^3 entries are stored).
inline constexpr int kMaxTabulatedPalette = 256;

/// A one-round algorithm A: [k] x [k] x [k] -> [c] written out for every triple (x, y, z)
/// with x != y and y != z.
class AlgorithmTable {
 public:
  using Rule = std::function<int(int x, int y, int z)>;

  struct Entry {
    int x, y, z, colour;
  };

  /// Evaluates `rule` on every valid triple. Throws std::invalid_argument for palettes out of
  /// range or outputs outside [c].
  static AlgorithmTable from_rule(int k, int c, const Rule& rule);

  /// Every valid triple must appear exactly once.
  static AlgorithmTable from_entries(int k, int c, const std::vector<Entry>& entries);

  int k() const noexcept { return k_; }
  int c() const noexcept { return c_; }

  /// Throws std::out_of_range for invalid triples.
  int at(int x, int y, int z) const;

  /// Copy with one entry replaced.
  AlgorithmTable with_entry(int x, int y, int z, int colour) const;

  /// Entries in (x, y, z) lexicographic order.
  std::vector<Entry> entries() const;

  static bool valid_triple(int k, int x, int y, int z) noexcept {
    return x >= 1 && y >= 1 && z >= 1 && x <= k && y <= k && z <= k && x != y && y != z;
  }

  friend bool operator==(const AlgorithmTable&, const AlgorithmTable&) = default;

 private:
  AlgorithmTable(int k, int c);
  std::size_t offset(int x, int y, int z) const noexcept {
    return (static_cast<std::size_t>(x - 1) * k_ + (y - 1)) * k_ + (z - 1);
  }
  void set(int x, int y, int z, int colour);

  int k_;
  int c_;
  std::vector<std::uint16_t> cells_;  // 0 marks an invalid triple
};

/// Result of a table check; `witness` holds the offending triple (symmetry) or quadruple
/// (properness), unused trailing slots are 0.
struct TableCheck {
  bool ok = true;
  std::optional<std::array<int, 4>> witness;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

/// A(x, y, z) == A(z, y, x) for every valid triple.
TableCheck check_symmetry(const AlgorithmTable& table);

/// A(x1, x2, x3) != A(x2, x3, x4) whenever x1 != x2, x2 != x3, x3 != x4.
TableCheck check_properness(const AlgorithmTable& table);

/// Collection {F_y : y in [k]} with F_y = {F_{x,y} : x != y} and F_{x,y} = {A(x,y,z) : z != y}.
/// Throws std::invalid_argument naming the failed check when the table is not symmetric
/// or not proper.
Collection extract(const AlgorithmTable& table);

/// The 4 -> 3 reduction: colours 1..3 stay, colour 4 takes min({1,2,3} \ {x, z}).
AlgorithmTable example_4to3();

/// A(x, y, z) = y over [k].
AlgorithmTable identity_table(int k);

}  // namespace colred
