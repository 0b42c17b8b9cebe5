#include "colred/compiler.hpp"

#include <bit>
#include <string>

namespace colred {

std::optional<std::pair<Subset, Subset>> first_disjoint_pair(const Family& lower, const Family& upper) {
  for (Subset p : lower.subsets()) {
    for (Subset q : upper.subsets()) {
      if (!p.intersects(q)) {
        return std::pair{p, q};
      }
    }
  }
  return std::nullopt;
}

std::pair<Subset, Subset> edge_label_pair_generic(const Collection& collection, const Colour& x, const Colour& y) {
  if (x == y) {
    throw std::invalid_argument("edge between equal colours " + to_decimal(x));
  }
  const bool x_lower = x < y;
  const Family lower = collection.family_at(x_lower ? x : y);
  const Family upper = collection.family_at(x_lower ? y : x);
  const auto found = first_disjoint_pair(lower, upper);
  if (!found) {
    throw NotColourfulError("families of colours " + to_decimal(x) + " and " + to_decimal(y) +
                            " have no disjoint pair");
  }
  return x_lower ? *found : std::pair{found->second, found->first};
}

ImplicitAlgorithm::ImplicitAlgorithm(Collection collection) : collection_(std::move(collection)) {
  if (collection_.construction() == nullptr) {
    if (const auto report = is_colourful(collection_); !report) {
      throw NotColourfulError("collection is not colourful: " + report.detail);
    }
  }
}

ImplicitAlgorithm::NodeLabel ImplicitAlgorithm::label(const Colour& colour) const {
  if (colour < 1 || colour > collection_.size()) {
    throw std::out_of_range("colour " + to_decimal(colour) + " outside input palette [" +
                            to_decimal(collection_.size()) + "]");
  }
  if (const Construction* construction = collection_.construction()) {
    return {colour, construction->label(colour)};
  }
  return {colour, colour.convert_to<std::size_t>() - 1};
}

std::pair<Subset, Subset> ImplicitAlgorithm::edge_labels(const NodeLabel& x, const NodeLabel& y) const {
  if (x.colour == y.colour) {
    throw std::invalid_argument("edge between equal colours " + to_decimal(x.colour));
  }
  const bool x_lower = x.colour < y.colour;
  const NodeLabel& lower = x_lower ? x : y;
  const NodeLabel& upper = x_lower ? y : x;

  std::pair<Subset, Subset> found{Subset(1), Subset(1)};
  if (const Construction* construction = collection_.construction()) {
    found = construction->first_disjoint(std::get<Construction::Label>(lower.family),
                                         std::get<Construction::Label>(upper.family));
  } else {
    const auto families = collection_.families();
    const auto scanned =
        first_disjoint_pair(families[std::get<std::size_t>(lower.family)], families[std::get<std::size_t>(upper.family)]);
    if (!scanned) {
      throw NotColourfulError("families of colours " + to_decimal(lower.colour) + " and " + to_decimal(upper.colour) +
                              " have no disjoint pair");
    }
    found = *scanned;
  }
  return x_lower ? found : std::pair{found.second, found.first};
}

int ImplicitAlgorithm::merge(Subset from_left, Subset from_right) {
  const std::uint32_t common = from_left.mask() & from_right.mask();
  if (common == 0) {
    throw NotColourfulError("incoming edge labels " + from_left.compact() + " and " + from_right.compact() +
                            " do not intersect");
  }
  return std::countr_zero(common) + 1;
}

int ImplicitAlgorithm::new_colour(const Colour& x, const Colour& y, const Colour& z) const {
  const NodeLabel centre = label(y);
  const auto left = edge_labels(label(x), centre);
  const auto right = edge_labels(label(z), centre);
  return merge(left.second, right.second);
}

AlgorithmTable tabulate(const ImplicitAlgorithm& algorithm, int k) {
  if (k > algorithm.input_palette()) {
    throw std::invalid_argument("cannot tabulate k=" + std::to_string(k) + " above the collection size " +
                                to_decimal(algorithm.input_palette()));
  }
  if (k > kMaxTabulatedPalette) {
    throw std::invalid_argument("k=" + std::to_string(k) + " is too large to tabulate (limit " +
                                std::to_string(kMaxTabulatedPalette) + ")");
  }
  std::vector<ImplicitAlgorithm::NodeLabel> labels;
  labels.reserve(static_cast<std::size_t>(k));
  for (int colour = 1; colour <= k; ++colour) {
    labels.push_back(algorithm.label(Colour(colour)));
  }
  // Y-side label of edge (x -> y), indexed [x-1][y-1].
  std::vector<std::uint32_t> incoming(static_cast<std::size_t>(k) * k, 0);
  for (int x = 1; x <= k; ++x) {
    for (int y = 1; y <= k; ++y) {
      if (x != y) {
        incoming[static_cast<std::size_t>(x - 1) * k + (y - 1)] = algorithm.edge_labels(labels[x - 1], labels[y - 1]).second.mask();
      }
    }
  }
  return AlgorithmTable::from_rule(k, algorithm.output_palette(), [&](int x, int y, int z) {
    return ImplicitAlgorithm::merge(Subset(incoming[static_cast<std::size_t>(x - 1) * k + (y - 1)]),
                                    Subset(incoming[static_cast<std::size_t>(z - 1) * k + (y - 1)]));
  });
}

}  // namespace colred
