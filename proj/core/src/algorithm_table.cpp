#include "colred/algorithm_table.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace colred {

namespace {

std::string triple_text(int x, int y, int z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

}  // namespace

AlgorithmTable::AlgorithmTable(int k, int c) : k_(k), c_(c) {
  if (k < 2 || k > kMaxTabulatedPalette) {
    throw std::invalid_argument("table input palette " + std::to_string(k) + " outside [2, " +
                                std::to_string(kMaxTabulatedPalette) + "]");
  }
  if (c < 1 || c > kMaxPalette) {
    throw std::invalid_argument("table output palette " + std::to_string(c) + " outside [1, " +
                                std::to_string(kMaxPalette) + "]");
  }
  cells_.assign(static_cast<std::size_t>(k) * k * k, 0);
}

void AlgorithmTable::set(int x, int y, int z, int colour) {
  if (!valid_triple(k_, x, y, z)) {
    throw std::out_of_range("invalid triple " + triple_text(x, y, z) + " for k=" + std::to_string(k_));
  }
  if (colour < 1 || colour > c_) {
    throw std::invalid_argument("output " + std::to_string(colour) + " at " + triple_text(x, y, z) + " outside [" +
                                std::to_string(c_) + "]");
  }
  cells_[offset(x, y, z)] = static_cast<std::uint16_t>(colour);
}

AlgorithmTable AlgorithmTable::from_rule(int k, int c, const Rule& rule) {
  AlgorithmTable table(k, c);
  for (int x = 1; x <= k; ++x) {
    for (int y = 1; y <= k; ++y) {
      for (int z = 1; z <= k; ++z) {
        if (valid_triple(k, x, y, z)) {
          table.set(x, y, z, rule(x, y, z));
        }
      }
    }
  }
  return table;
}

AlgorithmTable AlgorithmTable::from_entries(int k, int c, const std::vector<Entry>& entries) {
  AlgorithmTable table(k, c);
  for (const Entry& e : entries) {
    if (valid_triple(k, e.x, e.y, e.z) && table.cells_[table.offset(e.x, e.y, e.z)] != 0) {
      throw std::invalid_argument("duplicate entry " + triple_text(e.x, e.y, e.z));
    }
    table.set(e.x, e.y, e.z, e.colour);
  }
  const std::size_t expected = static_cast<std::size_t>(k) * (k - 1) * (k - 1);
  if (entries.size() != expected) {
    throw std::invalid_argument("table has " + std::to_string(entries.size()) + " entries, expected " +
                                std::to_string(expected));
  }
  return table;
}

int AlgorithmTable::at(int x, int y, int z) const {
  if (!valid_triple(k_, x, y, z)) {
    throw std::out_of_range("invalid triple " + triple_text(x, y, z) + " for k=" + std::to_string(k_));
  }
  return cells_[offset(x, y, z)];
}

AlgorithmTable AlgorithmTable::with_entry(int x, int y, int z, int colour) const {
  AlgorithmTable copy = *this;
  copy.set(x, y, z, colour);
  return copy;
}

std::vector<AlgorithmTable::Entry> AlgorithmTable::entries() const {
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(k_) * (k_ - 1) * (k_ - 1));
  for (int x = 1; x <= k_; ++x) {
    for (int y = 1; y <= k_; ++y) {
      for (int z = 1; z <= k_; ++z) {
        if (valid_triple(k_, x, y, z)) {
          out.push_back({x, y, z, cells_[offset(x, y, z)]});
        }
      }
    }
  }
  return out;
}

TableCheck check_symmetry(const AlgorithmTable& table) {
  const int k = table.k();
  for (int x = 1; x <= k; ++x) {
    for (int y = 1; y <= k; ++y) {
      for (int z = x + 1; z <= k; ++z) {
        if (!AlgorithmTable::valid_triple(k, x, y, z)) {
          continue;
        }
        if (table.at(x, y, z) != table.at(z, y, x)) {
          return {false, std::array{x, y, z, 0},
                  "A" + triple_text(x, y, z) + "=" + std::to_string(table.at(x, y, z)) + " but A" +
                      triple_text(z, y, x) + "=" + std::to_string(table.at(z, y, x))};
        }
      }
    }
  }
  return {};
}

TableCheck check_properness(const AlgorithmTable& table) {
  const int k = table.k();
  for (int x2 = 1; x2 <= k; ++x2) {
    for (int x3 = 1; x3 <= k; ++x3) {
      if (x2 == x3) {
        continue;
      }
      for (int x1 = 1; x1 <= k; ++x1) {
        if (x1 == x2) {
          continue;
        }
        const int left = table.at(x1, x2, x3);
        for (int x4 = 1; x4 <= k; ++x4) {
          if (x4 == x3) {
            continue;
          }
          if (left == table.at(x2, x3, x4)) {
            return {false, std::array{x1, x2, x3, x4},
                    "path (" + std::to_string(x1) + "," + std::to_string(x2) + "," + std::to_string(x3) + "," +
                        std::to_string(x4) + ") gives equal colours " + std::to_string(left) + " to its middle nodes"};
          }
        }
      }
    }
  }
  return {};
}

Collection extract(const AlgorithmTable& table) {
  if (auto sym = check_symmetry(table); !sym) {
    throw std::invalid_argument("extract: table is not symmetric: " + sym.detail);
  }
  if (auto proper = check_properness(table); !proper) {
    throw std::invalid_argument("extract: table is not proper: " + proper.detail);
  }
  const int k = table.k();
  std::vector<Family> families;
  families.reserve(static_cast<std::size_t>(k));
  for (int y = 1; y <= k; ++y) {
    std::vector<Subset> subsets;
    for (int x = 1; x <= k; ++x) {
      if (x == y) {
        continue;
      }
      std::uint32_t mask = 0;
      for (int z = 1; z <= k; ++z) {
        if (z != y) {
          mask |= std::uint32_t{1} << (table.at(x, y, z) - 1);
        }
      }
      subsets.emplace_back(mask);
    }
    families.emplace_back(std::move(subsets));
  }
  auto sorted = families;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::logic_error("extract: repeated family from a symmetric proper table");
  }
  return Collection::from_families(table.c(), std::move(families));
}

AlgorithmTable example_4to3() {
  return AlgorithmTable::from_rule(4, 3, [](int x, int y, int z) {
    if (y <= 3) {
      return y;
    }
    for (int colour = 1; colour <= 3; ++colour) {
      if (colour != x && colour != z) {
        return colour;
      }
    }
    return 0;  // unreachable: {x, z} leaves a colour of {1, 2, 3}
  });
}

AlgorithmTable identity_table(int k) {
  return AlgorithmTable::from_rule(k, k, [](int, int y, int) { return y; });
}

}  // namespace colred
