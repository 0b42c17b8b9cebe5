#include "colred/graph.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "colred/collection.hpp"

namespace colred {

std::string to_string(Topology topology) { return topology == Topology::path ? "path" : "cycle"; }

Topology parse_topology(const std::string& text) {
  if (text == "path") {
    return Topology::path;
  }
  if (text == "cycle") {
    return Topology::cycle;
  }
  throw std::invalid_argument("unknown topology '" + text + "' (expected path or cycle)");
}

std::string Violation::describe() const {
  switch (kind) {
    case Kind::equal_neighbours:
      return "equal colours at positions " + std::to_string(position) + " and " + std::to_string(other);
    case Kind::out_of_palette:
      return "colour outside the palette at position " + std::to_string(position);
    case Kind::bad_shape:
      return "too few nodes for the topology";
  }
  return {};
}

std::vector<Violation> validate(const ColouredGraph& graph) {
  std::vector<Violation> out;
  const std::size_t n = graph.size();
  if (n == 0 || (graph.topology == Topology::cycle && n < 3)) {
    out.push_back({Violation::Kind::bad_shape});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (graph.colours[i] < 1 || graph.colours[i] > graph.k) {
      out.push_back({Violation::Kind::out_of_palette, i});
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (graph.colours[i] == graph.colours[i + 1]) {
      out.push_back({Violation::Kind::equal_neighbours, i, i + 1});
    }
  }
  if (graph.topology == Topology::cycle && n >= 3 && graph.colours[n - 1] == graph.colours[0]) {
    out.push_back({Violation::Kind::equal_neighbours, n - 1, 0});
  }
  return out;
}

namespace {

void check_shape(Topology topology, std::size_t n) {
  if (topology == Topology::path && n < 1) {
    throw std::invalid_argument("a path needs at least one node");
  }
  if (topology == Topology::cycle && n < 3) {
    throw std::invalid_argument("a cycle needs at least three nodes");
  }
}

}  // namespace

ColouredGraph random_proper(Topology topology, std::size_t n, const BigInt& k, std::uint64_t seed) {
  check_shape(topology, n);
  const bool single = topology == Topology::path && n == 1;
  if (k < (single ? 1 : 2)) {
    throw std::invalid_argument("palette " + to_decimal(k) + " too small for a " + to_string(topology) + " of " +
                                std::to_string(n) + " nodes");
  }
  if (topology == Topology::cycle && n % 2 == 1 && k < 3) {
    throw std::invalid_argument("an odd cycle is not 2-colourable");
  }
  std::mt19937_64 rng(seed);
  ColouredGraph graph{topology, {}, k, false};
  graph.colours.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    while (true) {
      Colour colour = random_below(k, rng) + 1;
      if (i > 0 && colour == graph.colours[i - 1]) {
        continue;
      }
      if (topology == Topology::cycle && i == n - 1 && colour == graph.colours[0]) {
        continue;
      }
      graph.colours.push_back(std::move(colour));
      break;
    }
  }
  return graph;
}

ColouredGraph random_distinct(Topology topology, std::size_t n, const BigInt& k, std::uint64_t seed) {
  check_shape(topology, n);
  if (k < n) {
    throw std::invalid_argument("cannot draw " + std::to_string(n) + " distinct colours from [" + to_decimal(k) + "]");
  }
  std::mt19937_64 rng(seed);
  ColouredGraph graph{topology, {}, k, false};
  graph.colours.reserve(n);
  std::set<Colour> used;
  while (graph.colours.size() < n) {
    Colour colour = random_below(k, rng) + 1;
    if (used.insert(colour).second) {
      graph.colours.push_back(std::move(colour));
    }
  }
  return graph;
}

std::uint64_t digest(const std::vector<Colour>& colours) {
  std::uint64_t hash = 14695981039346656037ULL;
  const auto feed = [&hash](char ch) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 1099511628211ULL;
  };
  for (std::size_t i = 0; i < colours.size(); ++i) {
    if (i > 0) {
      feed(',');
    }
    for (char ch : to_decimal(colours[i])) {
      feed(ch);
    }
  }
  return hash;
}

}  // namespace colred
