#include "colred/simulator.hpp"

#include <sstream>

namespace colred {

BigInt input_palette(const Algorithm& algorithm) {
  return std::visit(
      [](const auto& alg) -> BigInt {
        using T = std::decay_t<decltype(alg)>;
        if constexpr (std::is_same_v<T, ImplicitAlgorithm>) {
          return alg.input_palette();
        } else {
          return alg.k();
        }
      },
      algorithm);
}

int output_palette(const Algorithm& algorithm) {
  return std::visit(
      [](const auto& alg) {
        using T = std::decay_t<decltype(alg)>;
        if constexpr (std::is_same_v<T, ImplicitAlgorithm>) {
          return alg.output_palette();
        } else {
          return alg.c();
        }
      },
      algorithm);
}

Colour virtual_neighbour(const Colour& own) { return own == 1 ? Colour(2) : Colour(1); }

namespace {

void require_proper(const ColouredGraph& graph) {
  if (const auto violations = validate(graph); !violations.empty()) {
    throw std::invalid_argument("input colouring is not proper: " + violations.front().describe());
  }
}

std::vector<Colour> step_implicit(const ColouredGraph& graph, const ImplicitAlgorithm& algorithm) {
  const std::size_t n = graph.size();
  std::vector<ImplicitAlgorithm::NodeLabel> labels;
  labels.reserve(n);
  for (const Colour& colour : graph.colours) {
    labels.push_back(algorithm.label(colour));
  }

  // Subsets on the incoming edges of each node.
  std::vector<Subset> from_left(n, Subset(1));
  std::vector<Subset> from_right(n, Subset(1));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto [left_side, right_side] = algorithm.edge_labels(labels[i], labels[i + 1]);
    from_right[i] = left_side;
    from_left[i + 1] = right_side;
  }
  if (graph.topology == Topology::cycle) {
    const auto [left_side, right_side] = algorithm.edge_labels(labels[n - 1], labels[0]);
    from_right[n - 1] = left_side;
    from_left[0] = right_side;
  } else {
    const auto first = algorithm.label(virtual_neighbour(graph.colours.front()));
    from_left[0] = algorithm.edge_labels(first, labels[0]).second;
    const auto last = algorithm.label(virtual_neighbour(graph.colours.back()));
    from_right[n - 1] = algorithm.edge_labels(last, labels[n - 1]).second;
  }

  std::vector<Colour> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(ImplicitAlgorithm::merge(from_left[i], from_right[i]));
  }
  return out;
}

std::vector<Colour> step_table(const ColouredGraph& graph, const AlgorithmTable& table) {
  const std::size_t n = graph.size();
  std::vector<int> in;
  in.reserve(n);
  for (const Colour& colour : graph.colours) {
    in.push_back(colour.convert_to<int>());
  }
  std::vector<Colour> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    int left = 0;
    int right = 0;
    if (graph.topology == Topology::cycle) {
      left = in[(i + n - 1) % n];
      right = in[(i + 1) % n];
    } else {
      left = i > 0 ? in[i - 1] : (in[i] == 1 ? 2 : 1);
      right = i + 1 < n ? in[i + 1] : (in[i] == 1 ? 2 : 1);
    }
    out.emplace_back(table.at(left, in[i], right));
  }
  return out;
}

}  // namespace

ColouredGraph step(const ColouredGraph& graph, const Algorithm& algorithm) {
  require_proper(graph);
  if (graph.k > input_palette(algorithm)) {
    throw PaletteMismatch("graph palette " + to_decimal(graph.k) + " exceeds the algorithm's input palette " +
                          to_decimal(input_palette(algorithm)));
  }
  ColouredGraph out{graph.topology, {}, output_palette(algorithm), graph.oriented};
  out.colours = std::visit(
      [&](const auto& alg) {
        using T = std::decay_t<decltype(alg)>;
        if constexpr (std::is_same_v<T, ImplicitAlgorithm>) {
          return step_implicit(graph, alg);
        } else {
          return step_table(graph, alg);
        }
      },
      algorithm);
  return out;
}

std::vector<Stage> default_chain() {
  std::vector<Stage> chain;
  chain.push_back({"construct(12)", ImplicitAlgorithm(construct(12))});
  chain.push_back({"construct(4)", ImplicitAlgorithm(construct(4))});
  chain.push_back({"base-c3", ImplicitAlgorithm(base_collection_c3())});
  return chain;
}

ChainResult run_chain(const ColouredGraph& graph, std::span<const Stage> chain, bool snapshots) {
  require_proper(graph);
  ChainResult result{graph, {}};
  for (std::size_t s = 0; s < chain.size(); ++s) {
    const Stage& stage = chain[s];
    const BigInt k_in = result.graph.k;
    const int k_out = output_palette(stage.algorithm);
    if (k_out >= k_in) {
      throw PaletteMismatch("stage " + std::to_string(s + 1) + " (" + stage.name + ") maps palette " +
                            to_decimal(k_in) + " to " + std::to_string(k_out) + ", which is not a reduction");
    }
    result.graph = step(result.graph, stage.algorithm);
    if (const auto violations = validate(result.graph); !violations.empty()) {
      throw std::logic_error("stage " + std::to_string(s + 1) + " (" + stage.name +
                             ") produced an improper colouring: " + violations.front().describe());
    }
    RoundRecord record{stage.name, k_in, k_out, digest(result.graph.colours), {}};
    if (snapshots) {
      record.snapshot = result.graph.colours;
    }
    result.trace.push_back(std::move(record));
  }
  return result;
}

}  // namespace colred
