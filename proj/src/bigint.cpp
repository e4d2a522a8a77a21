#include "gha/bigint.hpp"

#include <boost/multiprecision/integer.hpp>

#include "gha/error.hpp"

namespace gha {

BigInt parse_bigint(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty integer literal");
  BigInt out = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::ParseError,
                  "not a non-negative decimal integer: '" + std::string(text) +
                      "'");
    }
    out *= 10;
    out += c - '0';
  }
  return out;
}

std::size_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return boost::multiprecision::msb(value) + 1;
}

}  // namespace gha
