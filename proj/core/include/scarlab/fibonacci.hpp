#pragma once

#include <cstdint>
#include <stdexcept>

namespace scarlab {

/// Fibonacci numbers with F_1 = F_2 = 1, extended to negative indices by
/// F_{-n} = (-1)^{n+1} F_n, so that F_0 = 0 and F_{-1} = 1. The negative
/// extension is needed by the closed-form entropy expressions at the
/// subsystem-size boundaries. Exact in int64 for |n| <= 90.
inline std::int64_t fibonacci(int n) {
    if (n > 90 || n < -90) {
        throw std::invalid_argument("fibonacci: |n| > 90 overflows int64");
    }
    const bool negative = n < 0;
    const int m = negative ? -n : n;
    std::int64_t a = 0; // F_0
    std::int64_t b = 1; // F_1
    for (int i = 0; i < m; ++i) {
        const std::int64_t next = a + b;
        a = b;
        b = next;
    }
    if (negative && m % 2 == 0) return -a;
    return a;
}

} // namespace scarlab
