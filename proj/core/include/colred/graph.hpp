#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colred/bigint.hpp"

namespace colred {

enum class Topology { path, cycle };

std::string to_string(Topology topology);
/// Accepts "path" or "cycle".
Topology parse_topology(const std::string& text);

/// A path or cycle with one colour per node. Node i is adjacent to i-1 and i+1 (and, on a
/// cycle, node n-1 to node 0). `oriented` makes i-1 the predecessor of i.
struct ColouredGraph {
  Topology topology = Topology::path;
  std::vector<Colour> colours;
  BigInt k;  // palette bound: colours live in [k]
  bool oriented = false;

  std::size_t size() const noexcept { return colours.size(); }
  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;
};

struct Violation {
  enum class Kind { equal_neighbours, out_of_palette, bad_shape };
  Kind kind;
  std::size_t position = 0;
  std::size_t other = 0;  // second endpoint for equal_neighbours

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every adjacent equal pair and every colour outside [k]; a path needs n >= 1 and a cycle
/// n >= 3. Empty result means the colouring is proper.
std::vector<Violation> validate(const ColouredGraph& graph);

/// Proper colouring drawn node by node, each node uniform over the colours of [k] that
/// differ from its already coloured neighbours. Deterministic in `seed`.
/// Throws std::invalid_argument for infeasible parameters (e.g. an odd cycle with k = 2).
ColouredGraph random_proper(Topology topology, std::size_t n, const BigInt& k, std::uint64_t seed);

/// Pairwise distinct colours drawn uniformly from [k]; requires k >= n.
ColouredGraph random_distinct(Topology topology, std::size_t n, const BigInt& k, std::uint64_t seed);

/// FNV-1a over the decimal colours joined by ','.
std::uint64_t digest(const std::vector<Colour>& colours);

}  // namespace colred
