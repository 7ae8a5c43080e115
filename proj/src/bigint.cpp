#include "monodromy/bigint.hpp"

#include <cctype>
#include <limits>

namespace monodromy {

std::string to_string(const BigInt& value) { return value.str(); }

std::optional<BigInt> parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return std::nullopt;
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return std::nullopt;
  }
  BigInt result(text[0] == '+' ? text.substr(1) : text);
  return result;
}

BigInt abs(const BigInt& value) { return value < 0 ? BigInt(-value) : value; }

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  BigInt r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

BigInt floor_mod(const BigInt& a, const BigInt& b) {
  BigInt r = a - floor_div(a, b) * b;
  return r;
}

std::optional<BigInt> exact_sqrt(const BigInt& value) {
  if (value < 0) return std::nullopt;
  BigInt root = boost::multiprecision::sqrt(value);
  if (root * root != value) return std::nullopt;
  return root;
}

std::optional<std::int64_t> to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace monodromy
