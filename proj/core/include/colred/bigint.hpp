#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace colred {

/// Arbitrary-precision non-negative integer. Colours and palette sizes live here,
/// since palettes such as 2^462 + 12 are routine.
using BigInt = boost::multiprecision::cpp_int;

/// A colour in a palette [k] = {1, ..., k}.
using Colour = BigInt;

/// Parses a non-negative decimal literal, or a power written as "B^E".
/// Throws std::invalid_argument on anything else.
BigInt parse_big(std::string_view text);

std::string to_decimal(const BigInt& value);

/// 2^exponent.
BigInt pow2(unsigned exponent);

/// Number of significant bits (0 for zero).
unsigned bit_length(const BigInt& value);

/// Little-endian 64-bit words of a non-negative value, padded to `words` entries.
std::vector<std::uint64_t> to_words(const BigInt& value, std::size_t words);

/// Binomial coefficient, exact.
BigInt binomial(unsigned n, unsigned k);

}  // namespace colred
