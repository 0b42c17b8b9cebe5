#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>

#include "colred/algorithm_table.hpp"
#include "colred/collection.hpp"
#include "colred/construction.hpp"

namespace colred {

/// Raised when a collection handed to the compiler is not colourful.
class NotColourfulError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// First pair (P, Q), P from `lower` and Q from `upper`, with P and Q disjoint; P is scanned
/// in code order and Q in code order within each P.
std::optional<std::pair<Subset, Subset>> first_disjoint_pair(const Family& lower, const Family& upper);

/// Edge labels by scanning materialized families, whatever backs the collection.
/// Returns (X in family(x), Y in family(y)).
std::pair<Subset, Subset> edge_label_pair_generic(const Collection& collection, const Colour& x, const Colour& y);

/// One-round symmetric colour reduction |A| -> c defined by a colourful collection.
///
/// A node of colour y with neighbours x and z:
///   1. takes the family of its colour as its label,
///   2. labels each incoming edge with the subset on its side of the first disjoint pair
///      between the two endpoint families (scanned from the smaller colour),
///   3. outputs the smallest colour common to both incoming edge labels.
/// Both endpoints of an edge compute the same pair, so the rule needs no orientation.
class ImplicitAlgorithm {
 public:
  /// Explicit collections are checked with is_colourful (NotColourfulError on failure);
  /// collections from the construction are colourful by construction.
  explicit ImplicitAlgorithm(Collection collection);

  const Collection& collection() const noexcept { return collection_; }
  const BigInt& input_palette() const noexcept { return collection_.size(); }
  int output_palette() const noexcept { return collection_.c(); }

  /// Family label of a node, cached so that a round can reuse it for both incident edges.
  struct NodeLabel {
    Colour colour;
    std::variant<std::size_t, Construction::Label> family;  // index into families() or construction label
  };

  NodeLabel label(const Colour& colour) const;

  /// (X, Y) with X from the family of `x` and Y from the family of `y`, X and Y disjoint.
  std::pair<Subset, Subset> edge_labels(const NodeLabel& x, const NodeLabel& y) const;
  std::pair<Subset, Subset> edge_label_pair(const Colour& x, const Colour& y) const {
    return edge_labels(label(x), label(y));
  }

  /// Output colour given the Y-side labels of both incoming edges.
  static int merge(Subset from_left, Subset from_right);

  int new_colour(const Colour& x, const Colour& y, const Colour& z) const;

 private:
  Collection collection_;
};

/// Tabulates the algorithm on input palette [k]. Throws std::invalid_argument when k exceeds
/// the collection size or kMaxTabulatedPalette.
AlgorithmTable tabulate(const ImplicitAlgorithm& algorithm, int k);

}  // namespace colred
