#include <stdexcept>
#include <string>

#include "colred/simulator.hpp"

namespace colred {

ColouredGraph naive_step(const ColouredGraph& graph) {
  if (graph.k <= 3) {
    throw std::invalid_argument("naive reduction needs a palette of at least 4, got " + to_decimal(graph.k));
  }
  if (const auto violations = validate(graph); !violations.empty()) {
    throw std::invalid_argument("input colouring is not proper: " + violations.front().describe());
  }
  const std::size_t n = graph.size();
  const bool cycle = graph.topology == Topology::cycle;
  ColouredGraph out{graph.topology, graph.colours, graph.k - 1, graph.oriented};
  for (std::size_t i = 0; i < n; ++i) {
    if (graph.colours[i] != graph.k) {
      continue;
    }
    bool taken[4] = {false, false, false, false};
    const auto mark = [&taken](const Colour& colour) {
      if (colour <= 3) {
        taken[colour.convert_to<int>()] = true;
      }
    };
    if (i > 0 || cycle) {
      mark(graph.colours[(i + n - 1) % n]);
    }
    if (i + 1 < n || cycle) {
      mark(graph.colours[(i + 1) % n]);
    }
    int colour = 1;
    while (taken[colour]) {
      ++colour;
    }
    out.colours[i] = colour;
  }
  return out;
}

ColouredGraph cole_vishkin_step(const ColouredGraph& graph, unsigned bits) {
  if (!graph.oriented) {
    throw std::invalid_argument("Cole-Vishkin needs an oriented graph");
  }
  if (bits < 1) {
    throw std::invalid_argument("Cole-Vishkin needs at least one bit");
  }
  if (const auto violations = validate(graph); !violations.empty()) {
    throw std::invalid_argument("input colouring is not proper: " + violations.front().describe());
  }
  const std::size_t n = graph.size();
  const BigInt limit = pow2(bits);
  std::vector<BigInt> value;
  value.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    value.push_back(graph.colours[i] - 1);
    if (value.back() >= limit) {
      throw std::invalid_argument("colour at position " + std::to_string(i) + " does not fit in " +
                                  std::to_string(bits) + " bits");
    }
  }
  ColouredGraph out{graph.topology, {}, BigInt(2 * bits), true};
  out.colours.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt predecessor;
    if (i > 0) {
      predecessor = value[i - 1];
    } else if (graph.topology == Topology::cycle) {
      predecessor = value[n - 1];
    } else {
      predecessor = value[0] ^ BigInt(1);
    }
    const BigInt diff = value[i] ^ predecessor;
    const auto index = static_cast<unsigned>(boost::multiprecision::lsb(diff));
    const unsigned own_bit = boost::multiprecision::bit_test(value[i], index) ? 1U : 0U;
    out.colours.emplace_back(2 * index + own_bit + 1);
  }
  return out;
}

}  // namespace colred
