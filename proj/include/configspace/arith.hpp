#pragma once

#include <stdexcept>

namespace configspace {

inline long long checkedAdd(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in chain arithmetic");
    return r;
}

inline long long checkedMul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in chain arithmetic");
    return r;
}

}  // namespace configspace
