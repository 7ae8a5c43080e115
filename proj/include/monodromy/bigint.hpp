#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace monodromy {

/// Arbitrary-precision signed integer used for every matrix entry and
/// polynomial coefficient.
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const BigInt& value);

/// Parses a decimal integer with optional leading sign. Returns nullopt on
/// malformed input.
std::optional<BigInt> parse_bigint(const std::string& text);

BigInt abs(const BigInt& value);
BigInt gcd(const BigInt& a, const BigInt& b);

/// Floor division and the matching non-negative remainder (b != 0).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt floor_mod(const BigInt& a, const BigInt& b);

/// Integer square root of a perfect square, nullopt otherwise.
std::optional<BigInt> exact_sqrt(const BigInt& value);

/// Value as int64 when it fits.
std::optional<std::int64_t> to_int64(const BigInt& value);

}  // namespace monodromy
