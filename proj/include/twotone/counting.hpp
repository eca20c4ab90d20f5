// Exact counting of |W(m,n)| = |T(m,n)| by two independent routes:
//
//   closed form:     sum_{k=1}^{n} C(m+k, k) * C(n-1, k-1)          (n >= 1)
//   GF coefficient:  [x^n] ((1 - x) / (1 - 2x))^(m+1)
//
// Both return 1 at n = 0 (the empty word / the all-red tiling). All
// arithmetic is arbitrary precision; counts grow exponentially.

#pragma once

#include <stdexcept>
#include <vector>

#include "twotone/series.hpp"

namespace twotone {

using BigCount = BigInt;

// C(a, b), with the usual convention of 0 for b < 0 or b > a.
inline BigCount binomial(long long a, long long b) {
    if (a < 0) {
        throw std::invalid_argument("binomial requires a >= 0");
    }
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigCount r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= static_cast<long>(a - b + i);
        r /= static_cast<long>(i);  // exact: r is C(a-b+i, i) after each step
    }
    return r;
}

inline BigCount closed_form_count(int m, int n) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("counting requires m, n >= 0");
    }
    if (n == 0) return 1;
    BigCount total = 0;
    for (int k = 1; k <= n; ++k) {
        total += binomial(m + static_cast<long long>(k), k) * binomial(n - 1, k - 1);
    }
    return total;
}

inline BigCount gf_coefficient(int m, int n) {
    if (m < 0 || n < 0) {
        throw std::invalid_argument("counting requires m, n >= 0");
    }
    std::vector<BigInt> numerator(static_cast<std::size_t>(n) + 1);
    numerator[0] = 1;
    if (n >= 1) numerator[1] = -1;
    const PowerSeries base = PowerSeries(std::move(numerator))
                                 .mul(PowerSeries::geometric(2, n), n);
    return base.pow(static_cast<unsigned long>(m) + 1, n)[static_cast<std::size_t>(n)];
}

}  // namespace twotone
