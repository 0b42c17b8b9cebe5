#include "colred/subset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace colred {

namespace {

void check_colour(int colour) {
  if (colour < 1 || colour > kMaxPalette) {
    throw std::invalid_argument("colour " + std::to_string(colour) + " outside [1, " + std::to_string(kMaxPalette) +
                                "]");
  }
}

std::uint32_t full_mask(int c) {
  if (c < 1 || c > kMaxPalette) {
    throw std::invalid_argument("palette size " + std::to_string(c) + " outside [1, " +
                                std::to_string(kMaxPalette) + "]");
  }
  return c == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << c) - 1;
}

}  // namespace

Subset::Subset(std::uint32_t mask) : mask_(mask) {
  if (mask == 0) {
    throw std::invalid_argument("empty subset");
  }
}

Subset Subset::of(std::initializer_list<int> colours) {
  return of(std::span<const int>(colours.begin(), colours.size()));
}

Subset Subset::of(std::span<const int> colours) {
  std::uint32_t mask = 0;
  for (int colour : colours) {
    check_colour(colour);
    mask |= std::uint32_t{1} << (colour - 1);
  }
  return Subset(mask);
}

Subset Subset::singleton(int colour) {
  check_colour(colour);
  return Subset(std::uint32_t{1} << (colour - 1));
}

Subset Subset::full(int c) { return Subset(full_mask(c)); }

int Subset::size() const noexcept { return std::popcount(mask_); }

int Subset::max_colour() const noexcept { return std::bit_width(mask_); }

int Subset::min_colour() const noexcept { return std::countr_zero(mask_) + 1; }

bool Subset::contains(int colour) const noexcept {
  return colour >= 1 && colour <= kMaxPalette && ((mask_ >> (colour - 1)) & 1U) != 0;
}

bool Subset::within(int c) const noexcept { return max_colour() <= c; }

Subset Subset::complement(int c) const { return Subset(full_mask(c) & ~mask_); }

std::vector<int> Subset::colours() const {
  std::vector<int> out;
  for (std::uint32_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string Subset::compact() const {
  const auto list = colours();
  std::string out;
  if (max_colour() <= 9) {
    for (int colour : list) {
      out += static_cast<char>('0' + colour);
    }
    return out;
  }
  out = "{";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(list[i]);
  }
  out += '}';
  return out;
}

Family::Family(std::vector<Subset> subsets) : subsets_(std::move(subsets)) {
  if (subsets_.empty()) {
    throw std::invalid_argument("empty family");
  }
  std::sort(subsets_.begin(), subsets_.end());
  subsets_.erase(std::unique(subsets_.begin(), subsets_.end()), subsets_.end());
}

Family::Family(std::initializer_list<Subset> subsets) : Family(std::vector<Subset>(subsets)) {}

bool Family::contains(Subset subset) const noexcept {
  return std::binary_search(subsets_.begin(), subsets_.end(), subset);
}

int Family::max_colour() const noexcept {
  std::uint32_t all = 0;
  for (Subset s : subsets_) {
    all |= s.mask();
  }
  return std::bit_width(all);
}

std::string Family::compact() const {
  std::string out;
  for (std::size_t i = 0; i < subsets_.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += subsets_[i].compact();
  }
  return out;
}

std::strong_ordering operator<=>(const Family& a, const Family& b) {
  if (auto cmp = a.subsets_.size() <=> b.subsets_.size(); cmp != 0) {
    return cmp;
  }
  return std::lexicographical_compare_three_way(a.subsets_.begin(), a.subsets_.end(), b.subsets_.begin(),
                                                b.subsets_.end());
}

bool check_p1(const Family& family) noexcept {
  const auto subsets = family.subsets();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i; j < subsets.size(); ++j) {
      if (!subsets[i].intersects(subsets[j])) {
        return false;
      }
    }
  }
  return true;
}

bool check_p2(const Family& a, const Family& b) noexcept {
  for (Subset x : a.subsets()) {
    for (Subset y : b.subsets()) {
      if (!x.intersects(y)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace colred
