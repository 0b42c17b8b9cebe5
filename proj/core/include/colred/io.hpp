#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "colred/algorithm_table.hpp"
#include "colred/collection.hpp"
#include "colred/graph.hpp"
#include "colred/search.hpp"
#include "colred/simulator.hpp"

namespace colred {

/// Malformed input. The message names the offending line/column or field path.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Collections: {"c": 3, "k": 4, "families": [[[1], [2, 3]], ...]}. Collections from the
// construction are written as {"c": 12, "rule": "construct"} regardless of size.
std::string save_collection(const Collection& collection);
Collection load_collection(std::string_view text);

// Tables: {"k": 4, "c": 3, "entries": [[x, y, z, colour], ...]} in (x, y, z) order.
std::string save_table(const AlgorithmTable& table);
AlgorithmTable load_table(std::string_view text);

// Graphs: {"topology": "path", "k": "12", "colours": ["1", "2", ...], "oriented": false}.
// Colours and k are decimal strings so that arbitrarily large values survive.
std::string save_graph(const ColouredGraph& graph);
ColouredGraph load_graph(std::string_view text);

// One object per round: {"stage", "k_in", "k_out", "digest"} plus "colours" when snapshotted.
std::string save_trace(const ChainTrace& trace);

// {"c", "best_size", "exhaustive", "maximal_only", "nodes", "witness": <collection or null>}.
std::string save_search_result(const SearchResult& result);
SearchResult load_search_result(std::string_view text);

/// Sniffs whether a document holds a table ("entries") or a collection.
bool looks_like_table(std::string_view text);

}  // namespace colred
