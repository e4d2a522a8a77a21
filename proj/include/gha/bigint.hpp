#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gha {

/// House values and envies. Gadget values reach hundreds of bits.
using BigInt = boost::multiprecision::cpp_int;

/// Parses a non-negative decimal integer. Throws Error(ParseError).
BigInt parse_bigint(std::string_view text);

inline std::string to_decimal(const BigInt& value) { return value.str(); }

/// Number of bits in the binary representation (0 for zero).
std::size_t bit_length(const BigInt& value);

}  // namespace gha
