#pragma once

// Exact counting arithmetic. All counts in the library are signed 128-bit
// integers with overflow detection; an overflow raises std::range_error
// instead of wrapping.

#include <cstdint>
#include <string>

namespace qnary {

__extension__ typedef __int128 Count;

Count checked_add(Count a, Count b);
Count checked_sub(Count a, Count b);
Count checked_mul(Count a, Count b);
Count checked_pow(Count base, unsigned exponent);

/// Decimal rendering; std::to_string has no 128-bit overload.
std::string to_string(Count value);

/// Narrowing with a range check.
std::uint64_t to_u64(Count value);

/// Möbius function for n >= 1.
int mobius(std::uint64_t n);

}  // namespace qnary
