#include "colred/collection.hpp"

#include <algorithm>
#include <sstream>

#include "colred/construction.hpp"

namespace colred {

Collection Collection::from_families(int c, std::vector<Family> families) {
  if (c < 1 || c > kMaxPalette) {
    throw std::invalid_argument("palette size " + std::to_string(c) + " outside [1, " + std::to_string(kMaxPalette) +
                                "]");
  }
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (families[i].max_colour() > c) {
      throw std::invalid_argument("family " + std::to_string(i + 1) + " uses colours outside [" + std::to_string(c) +
                                  "]");
    }
  }
  Collection out;
  out.c_ = c;
  out.size_ = families.size();
  out.families_ = std::make_shared<const std::vector<Family>>(std::move(families));
  return out;
}

Collection Collection::from_construction(std::shared_ptr<const Construction> construction,
                                         std::size_t materialization_bound) {
  Collection out;
  out.c_ = construction->c();
  out.size_ = construction->size();
  if (out.size_ <= materialization_bound) {
    const auto n = out.size_.convert_to<std::size_t>();
    std::vector<Family> families;
    families.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
      families.push_back(construction->family_at(Colour(i)));
    }
    out.families_ = std::make_shared<const std::vector<Family>>(std::move(families));
  }
  out.construction_ = std::move(construction);
  return out;
}

std::span<const Family> Collection::families() const {
  if (is_lazy()) {
    throw LazyCollectionError("collection of size " + to_decimal(size_) +
                              " is lazy and cannot be materialized; use sampled verification");
  }
  return *families_;
}

Family Collection::family_at(const Colour& index) const {
  if (index < 1 || index > size_) {
    throw std::out_of_range("colour " + to_decimal(index) + " outside [1, " + to_decimal(size_) + "]");
  }
  if (families_) {
    return (*families_)[index.convert_to<std::size_t>() - 1];
  }
  return construction_->family_at(index);
}

bool Collection::same_families(const Collection& other) const {
  const auto a = families();
  const auto b = other.families();
  if (c_ != other.c_ || a.size() != b.size()) {
    return false;
  }
  std::vector<Family> left(a.begin(), a.end());
  std::vector<Family> right(b.begin(), b.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return left == right;
}

std::string Collection::compact() const {
  std::ostringstream out;
  for (const Family& family : families()) {
    out << family.compact() << '\n';
  }
  return out.str();
}

Collection base_collection_c3() {
  return Collection::from_families(3, {
                                          Family{Subset::of({1})},
                                          Family{Subset::of({2})},
                                          Family{Subset::of({3})},
                                          Family{Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3})},
                                      });
}

ColourfulReport is_colourful(const Collection& collection) {
  const auto families = collection.families();
  ColourfulReport report;
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (!check_p1(families[i])) {
      report.colourful = false;
      report.bad_family = BigInt(i + 1);
      report.detail = "family " + std::to_string(i + 1) + " (" + families[i].compact() + ") violates P1";
      return report;
    }
  }
  for (std::size_t i = 0; i < families.size(); ++i) {
    for (std::size_t j = i + 1; j < families.size(); ++j) {
      if (!check_p2(families[i], families[j])) {
        report.colourful = false;
        report.bad_pair = std::pair{BigInt(i + 1), BigInt(j + 1)};
        report.detail = "families " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " violate P2";
        return report;
      }
    }
  }
  return report;
}

BigInt random_below(const BigInt& bound, std::mt19937_64& rng) {
  if (bound < 1) {
    throw std::invalid_argument("random_below: bound must be positive");
  }
  const unsigned bits = bit_length(bound);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = bits - static_cast<unsigned>(64 * (words - 1));
  while (true) {
    BigInt value = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = rng();
      if (w == 0 && top_bits < 64) {
        word &= (std::uint64_t{1} << top_bits) - 1;
      }
      value <<= 64;
      value += word;
    }
    if (value < bound) {
      return value;
    }
  }
}

ColourfulReport verify_sampled(const Collection& collection, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ColourfulReport report;
  const BigInt& n = collection.size();
  for (std::size_t t = 0; t < samples; ++t) {
    const BigInt i = random_below(n, rng) + 1;
    if (!check_p1(collection.family_at(i))) {
      report.colourful = false;
      report.bad_family = i;
      report.detail = "family " + to_decimal(i) + " violates P1";
      return report;
    }
  }
  if (n < 2) {
    return report;
  }
  for (std::size_t t = 0; t < samples; ++t) {
    const BigInt i = random_below(n, rng) + 1;
    BigInt j = random_below(n - 1, rng) + 1;
    if (j >= i) {
      j += 1;
    }
    if (!check_p2(collection.family_at(i), collection.family_at(j))) {
      report.colourful = false;
      report.bad_pair = std::pair{i, j};
      report.detail = "families " + to_decimal(i) + " and " + to_decimal(j) + " violate P2";
      return report;
    }
  }
  return report;
}

}  // namespace colred
