#pragma once

#include <mutex>
#include <vector>

#include "rational.hpp"

namespace mzsv {

namespace detail {

struct BernoulliCache {
    std::mutex mutex;
    std::vector<Rational> values{Rational(1)};
};

inline BernoulliCache& bernoulli_cache()
{
    static BernoulliCache cache;
    return cache;
}

} // namespace detail

// B_n with B_1 = -1/2, from sum_{k=0}^{n} C(n+1,k) B_k = 0. Memoized; the cache
// only ever grows, so concurrent callers observe the same values.
inline Rational bernoulli(unsigned n)
{
    auto& cache = detail::bernoulli_cache();
    std::lock_guard lock(cache.mutex);
    auto& b = cache.values;
    while (b.size() <= n) {
        const auto m = static_cast<unsigned>(b.size());
        if (m >= 3 && m % 2 == 1) {
            b.emplace_back(0);
            continue;
        }
        Rational acc;
        for (unsigned k = 0; k < m; ++k) {
            if (!b[k].is_zero()) {
                acc += Rational(binomial(m + 1, k)) * b[k];
            }
        }
        b.push_back(-acc / Rational(static_cast<long>(m) + 1));
    }
    return b[n];
}

// Coefficient of x^(2n-1) in the Laurent expansion of csc x:
// (-1)^(n-1) (2^(2n) - 2) B_(2n) / (2n)!.
inline Rational csc_coefficient(unsigned n)
{
    Rational c = Rational(pow2(2 * n) - 2) * bernoulli(2 * n) / Rational(factorial(2 * n));
    return n % 2 == 1 ? c : -c;
}

} // namespace mzsv
