#include "colred/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace colred {

namespace {

BigInt parse_decimal(std::string_view text, std::string_view whole) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument("not a non-negative integer: '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char ch : text) {
    value *= 10;
    value += ch - '0';
  }
  return value;
}

}  // namespace

BigInt parse_big(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    return parse_decimal(text, text);
  }
  const BigInt base = parse_decimal(text.substr(0, caret), text);
  const BigInt exponent = parse_decimal(text.substr(caret + 1), text);
  if (exponent > 100000) {
    throw std::invalid_argument("exponent too large: '" + std::string(text) + "'");
  }
  return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt pow2(unsigned exponent) {
  BigInt value = 0;
  boost::multiprecision::bit_set(value, exponent);
  return value;
}

unsigned bit_length(const BigInt& value) {
  if (value.is_zero()) {
    return 0;
  }
  return static_cast<unsigned>(boost::multiprecision::msb(value)) + 1;
}

std::vector<std::uint64_t> to_words(const BigInt& value, std::size_t words) {
  if (value < 0) {
    throw std::invalid_argument("to_words: negative value");
  }
  std::vector<std::uint64_t> out;
  out.reserve(words);
  boost::multiprecision::export_bits(value, std::back_inserter(out), 64, false);
  if (out.size() > words) {
    throw std::invalid_argument("to_words: value does not fit");
  }
  out.resize(words, 0);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace colred
