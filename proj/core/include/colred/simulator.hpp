#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "colred/algorithm_table.hpp"
#include "colred/compiler.hpp"
#include "colred/graph.hpp"

namespace colred {

/// A one-round algorithm the simulator can execute.
using Algorithm = std::variant<ImplicitAlgorithm, AlgorithmTable>;

BigInt input_palette(const Algorithm& algorithm);
int output_palette(const Algorithm& algorithm);

/// The graph's palette does not fit the algorithm, or a stage would not shrink it.
class PaletteMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Colour a path endpoint pretends its missing neighbour has: the smallest colour different
/// from its own.
Colour virtual_neighbour(const Colour& own);

/// One synchronous round: every node applies the algorithm to (left, own, right) using the
/// old colours only. The result has palette bound output_palette(algorithm).
/// Throws std::invalid_argument for an improper input, PaletteMismatch when g.k exceeds the
/// algorithm's input palette.
ColouredGraph step(const ColouredGraph& graph, const Algorithm& algorithm);

struct Stage {
  std::string name;
  Algorithm algorithm;
};

/// construct(12), construct(4), then the base collection over [3]:
/// 2^462 + 12 -> 12 -> 4 -> 3.
std::vector<Stage> default_chain();

struct RoundRecord {
  std::string stage;
  BigInt k_in;
  BigInt k_out;
  std::uint64_t digest = 0;
  std::vector<Colour> snapshot;  // filled only when snapshots are requested
};

using ChainTrace = std::vector<RoundRecord>;

struct ChainResult {
  ColouredGraph graph;
  ChainTrace trace;
};

/// Runs the stages in order. Every stage must accept the current palette and return a
/// strictly smaller one (PaletteMismatch otherwise). Each intermediate colouring is
/// validated; a failure there is an internal error and raises std::logic_error.
ChainResult run_chain(const ColouredGraph& graph, std::span<const Stage> chain, bool snapshots = false);

/// Removes colour class k: each node of colour k takes min({1,2,3} minus its neighbours'
/// colours). Requires k >= 4.
ColouredGraph naive_step(const ColouredGraph& graph);

/// Cole-Vishkin on an oriented graph whose colours minus one fit in `bits` bits. Node v with
/// predecessor u finds the lowest bit i where they differ and takes 2i + bit_i(v) (plus one,
/// to stay in [2*bits]). The first node of a path compares against its own value with bit 0
/// flipped.
ColouredGraph cole_vishkin_step(const ColouredGraph& graph, unsigned bits);

}  // namespace colred
