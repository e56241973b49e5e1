#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqtile {

// All geometry and sequence arithmetic uses checked 64-bit integers.
// Whirl tails grow geometrically, so silent wraparound would corrupt
// certificates; every arithmetic helper below throws instead.
using Int = std::int64_t;

class IntOverflowError : public std::overflow_error {
  public:
    explicit IntOverflowError(const std::string& what) : std::overflow_error(what) {}
};

[[nodiscard]] inline Int checked_add(Int a, Int b) {
    Int r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw IntOverflowError("integer overflow in addition");
    }
    return r;
}

[[nodiscard]] inline Int checked_sub(Int a, Int b) {
    Int r = 0;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw IntOverflowError("integer overflow in subtraction");
    }
    return r;
}

[[nodiscard]] inline Int checked_mul(Int a, Int b) {
    Int r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw IntOverflowError("integer overflow in multiplication");
    }
    return r;
}

// Exact test for b/a > (1+sqrt(5))/2 with a, b >= 1.
// Equivalent integer form: 2b > a and (2b - a)^2 > 5a^2.
// Evaluated in 128-bit arithmetic; when 5a^2 exceeds the 128-bit range it
// already dwarfs (2b - a)^2, so the comparison is still exact.
[[nodiscard]] inline bool ratio_exceeds_golden(Int a, Int b) {
    if (a < 1 || b < 1) {
        throw std::invalid_argument("ratio_exceeds_golden requires positive integers");
    }
    unsigned __int128 ua = static_cast<unsigned __int128>(a);
    unsigned __int128 ub = static_cast<unsigned __int128>(b);
    if (2 * ub <= ua) {
        return false;
    }
    unsigned __int128 d = 2 * ub - ua;
    unsigned __int128 lhs = d * d;  // d < 2^64, so lhs fits
    unsigned __int128 asq = ua * ua;
    constexpr unsigned __int128 u128_max = ~static_cast<unsigned __int128>(0);
    if (asq > u128_max / 5) {
        return false;
    }
    return lhs > 5 * asq;
}

}  // namespace sqtile
