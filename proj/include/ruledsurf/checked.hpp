#pragma once

#include <cstdint>
#include <stdexcept>

namespace ruledsurf::checked {

// Overflow-checked 64-bit arithmetic. Every lattice computation in the
// library goes through these; wraparound is reported as std::overflow_error.

inline std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

// Floor division for any sign of the dividend; divisor must be positive.
inline std::int64_t floor_div(std::int64_t x, std::int64_t d) {
    std::int64_t q = x / d;
    if ((x % d != 0) && (x < 0)) --q;
    return q;
}

inline std::int64_t ceil_div(std::int64_t x, std::int64_t d) {
    std::int64_t q = x / d;
    if ((x % d != 0) && (x > 0)) ++q;
    return q;
}

}  // namespace ruledsurf::checked
