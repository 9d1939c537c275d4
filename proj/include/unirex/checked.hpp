#ifndef UNIREX_CHECKED_HPP
#define UNIREX_CHECKED_HPP

#include <cstdint>

#include "unirex/error.hpp"

namespace unirex {

// Exact unsigned 64-bit arithmetic. Counts are exact up to 2^64 - 1; anything
// beyond raises ErrorKind::overflow instead of wrapping.

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorKind::overflow, "integer overflow in addition");
    }
    return r;
}

inline std::uint64_t checked_sub(std::uint64_t a, std::uint64_t b) {
    if (b > a) {
        throw Error(ErrorKind::overflow, "integer underflow in subtraction");
    }
    return a - b;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorKind::overflow, "integer overflow in multiplication");
    }
    return r;
}

} // namespace unirex

#endif // UNIREX_CHECKED_HPP
