#include "qnary/integer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qnary {

Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) throw std::range_error("integer overflow in addition");
  return out;
}

Count checked_sub(Count a, Count b) {
  Count out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::range_error("integer overflow in subtraction");
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::range_error("integer overflow in multiplication");
  return out;
}

Count checked_pow(Count base, unsigned exponent) {
  Count result = 1;
  while (exponent > 0) {
    if (exponent & 1U) result = checked_mul(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = checked_mul(base, base);
  }
  return result;
}

std::string to_string(Count value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string digits;
  // Work with negative remainders so the minimum value does not overflow.
  while (value != 0) {
    const int rem = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -rem : rem)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::uint64_t to_u64(Count value) {
  if (value < 0 || value > static_cast<Count>(std::numeric_limits<std::uint64_t>::max()))
    throw std::range_error("count does not fit in 64 bits: " + to_string(value));
  return static_cast<std::uint64_t>(value);
}

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

}  // namespace qnary
