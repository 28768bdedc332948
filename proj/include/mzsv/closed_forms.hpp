#pragma once

#include <stdexcept>
#include <vector>

#include "bernoulli.hpp"
#include "compositions.hpp"
#include "cyclotomic.hpp"
#include "rational.hpp"

// Exact pi-power evaluations of multiple zeta(-star) values. Every function
// returning Rational gives the coefficient q of q * pi^w, w being the weight.

namespace mzsv {

// C_n^(m): C_0 = 1, C_n = (1/2n) sum_{l=1}^{n} (-1)^l C(2mn, 2ml) B_{2ml} C_{n-l}.
inline Rational thm1_C(unsigned m, unsigned n)
{
    if (m == 0) {
        throw std::invalid_argument("thm1_C: m must be positive");
    }
    std::vector<Rational> c{Rational(1)};
    for (unsigned j = 1; j <= n; ++j) {
        Rational acc;
        for (unsigned l = 1; l <= j; ++l) {
            Rational term = Rational(binomial(2 * m * j, 2 * m * l)) * bernoulli(2 * m * l) * c[j - l];
            acc += l % 2 == 1 ? -term : term;
        }
        c.push_back(acc / Rational(2L * j));
    }
    return c[n];
}

// zeta({2m}^n) = C_n^(m) (2 pi i)^(2mn) / (2mn)!, with (2 pi i)^(2mn) = (-4)^(mn) pi^(2mn).
inline PiMultiple mzv_repeated_2m(unsigned m, unsigned n)
{
    const unsigned mn = m * n;
    Rational scale = Rational(pow2(2 * mn)) / Rational(factorial(2 * mn));
    if (mn % 2 == 1) {
        scale = -scale;
    }
    return {thm1_C(m, n) * scale, 2 * mn};
}

// zeta(2k) = (-1)^(k+1) B_{2k} (2 pi)^(2k) / (2 (2k)!).
inline PiMultiple euler_zeta_even(unsigned k)
{
    if (k == 0) {
        throw std::invalid_argument("euler_zeta_even: k must be positive");
    }
    Rational c = bernoulli(2 * k) * Rational(pow2(2 * k - 1)) / Rational(factorial(2 * k));
    return {k % 2 == 1 ? c : -c, 2 * k};
}

namespace detail {

// (2^(2j) - 2) B_{2j} / (2j)!, the unsigned cosecant factor shared by all formulas.
inline Rational csc_factor(unsigned j)
{
    return Rational(pow2(2 * j) - 2) * bernoulli(2 * j) / Rational(factorial(2 * j));
}

} // namespace detail

// zeta*({2m}^n) / pi^(2mn) as the root-of-unity weighted composition sum
//   (-1)^(m(n-1)) sum_{n_0+...+n_{m-1} = mn} prod_k csc_factor(n_k) * w^(sum_l l n_l),
// w = exp(2 pi i / m), accumulated in Q[t]/(t^m - 1) and read off modulo Phi_m.
// Throws NotRational if the reduced sum is not rational.
inline Rational thmA_coefficient(unsigned m, unsigned n)
{
    if (m == 0) {
        throw std::invalid_argument("thmA_coefficient: m must be positive");
    }
    const unsigned total = m * n;

    // Scale every factor to an integer over a common denominator so the hot loop
    // is integer multiply-add only.
    std::vector<Rational> factor;
    BigInt den = 1;
    for (unsigned j = 0; j <= total; ++j) {
        factor.push_back(detail::csc_factor(j));
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), factor.back().denominator().get_mpz_t());
    }
    std::vector<BigInt> scaled;
    for (const auto& f : factor) {
        scaled.push_back(f.numerator() * (den / f.denominator()));
    }

    std::vector<BigInt> bucket(m, BigInt(0));
    BigInt prod;
    CompositionIterator it(m, total);
    do {
        const auto& c = it.current();
        prod = scaled[c[0]];
        unsigned long exponent = 0;
        for (unsigned l = 1; l < m; ++l) {
            prod *= scaled[c[l]];
            exponent += static_cast<unsigned long>(l) * c[l];
        }
        bucket[exponent % m] += prod;
    } while (it.next());

    BigInt den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), m);
    const bool negate = (static_cast<unsigned long>(m) * (n + 1)) % 2 == 1; // (-1)^(m(n-1))
    std::vector<Rational> coeffs;
    coeffs.reserve(m);
    for (auto& b : bucket) {
        Rational v(b, den_pow);
        coeffs.push_back(negate ? -v : v);
    }
    return cyclo_rational_value(CycloElem(m, std::move(coeffs)));
}

namespace detail {

inline Rational even_zeta_ratio(unsigned k) { return euler_zeta_even(k).coeff; }

} // namespace detail

// zeta*({2m}^n) is the complete homogeneous symmetric function h_n in the
// variables i^(-2m); with power sums p_k = zeta(2mk): n h_n = sum_k h_{n-k} p_k.
inline Rational newton_h_oracle(unsigned m, unsigned n)
{
    std::vector<Rational> h{Rational(1)};
    for (unsigned j = 1; j <= n; ++j) {
        Rational acc;
        for (unsigned k = 1; k <= j; ++k) {
            acc += h[j - k] * detail::even_zeta_ratio(m * k);
        }
        h.push_back(acc / Rational(static_cast<long>(j)));
    }
    return h[n];
}

// zeta({2m}^n) as the elementary symmetric function: n e_n = sum_k (-1)^(k-1) e_{n-k} p_k.
inline Rational newton_e_oracle(unsigned m, unsigned n)
{
    std::vector<Rational> e{Rational(1)};
    for (unsigned j = 1; j <= n; ++j) {
        Rational acc;
        for (unsigned k = 1; k <= j; ++k) {
            const Rational term = e[j - k] * detail::even_zeta_ratio(m * k);
            acc += k % 2 == 1 ? term : -term;
        }
        e.push_back(acc / Rational(static_cast<long>(j)));
    }
    return e[n];
}

// alpha_n = sum_{n_0 + n_1 = 2n} (-1)^(n_1) csc_factor(n_0) csc_factor(n_1).
// Also the inner sum of the (3,1)^n star formula.
inline Rational alpha(unsigned n)
{
    Rational acc;
    for (unsigned n1 = 0; n1 <= 2 * n; ++n1) {
        const Rational term = detail::csc_factor(2 * n - n1) * detail::csc_factor(n1);
        acc += n1 % 2 == 0 ? term : -term;
    }
    return acc;
}

// zeta((3,1)^n) = 2 pi^(4n) / (4n+2)!.
inline PiMultiple mzv_31_repeated(unsigned n)
{
    return {Rational(BigInt(2), factorial(4 * n + 2)), 4 * n};
}

// Sum of zeta over the 2n+1 insertions of 2 into (3,1)^n: pi^(4n+2) / (4n+3)!.
inline PiMultiple thm3_sum(unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("thm3_sum: n must be positive");
    }
    return {Rational(BigInt(1), factorial(4 * n + 3)), 4 * n + 2};
}

// zeta*((3,1)^n) / pi^(4n) = sum_{i=0}^{n} 2/(4i+2)! alpha_{n-i}.
inline Rational thmB_coefficient(unsigned n)
{
    Rational acc;
    for (unsigned i = 0; i <= n; ++i) {
        acc += mzv_31_repeated(i).coeff * alpha(n - i);
    }
    return acc;
}

// Same value through zeta*((3,1)^n) = sum_i zeta((3,1)^i) zeta*(4^(n-i)).
inline Rational thmB_via_relation(unsigned n)
{
    Rational acc;
    for (unsigned i = 0; i <= n; ++i) {
        acc += mzv_31_repeated(i).coeff * thmA_coefficient(2, n - i);
    }
    return acc;
}

// Sum of zeta* over the insertions I_{2n}, divided by pi^(4n+2):
//   sum_{k=0}^{n} [ 2^(4k+3) B_{4k+2}/(4k+2)! sum_{i=0}^{n-k} alpha_{n-k-i}/(4i+2)!
//                   - alpha_{n-k}/(4k+3)! ].
inline Rational thmC_coefficient(unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("thmC_coefficient: n must be positive");
    }
    Rational acc;
    for (unsigned k = 0; k <= n; ++k) {
        const Rational lead =
            Rational(pow2(4 * k + 3)) * bernoulli(4 * k + 2) / Rational(factorial(4 * k + 2));
        Rational inner;
        for (unsigned i = 0; i <= n - k; ++i) {
            inner += alpha(n - k - i) / Rational(factorial(4 * i + 2));
        }
        acc += lead * inner - alpha(n - k) / Rational(factorial(4 * k + 3));
    }
    return acc;
}

// Same value through
//   sum_{I_2n} zeta* = 2 sum_k zeta(4k+2) zeta*((3,1)^(n-k)) - sum_k zeta*(4^(n-k)) sum_{I_2k} zeta,
// with the boundary term sum_{I_0} zeta read as zeta(2).
inline Rational thmC_via_relation(unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("thmC_via_relation: n must be positive");
    }
    Rational acc;
    for (unsigned k = 0; k <= n; ++k) {
        acc += Rational(2) * euler_zeta_even(2 * k + 1).coeff * thmB_coefficient(n - k);
        const Rational insert_sum = k == 0 ? euler_zeta_even(1).coeff : thm3_sum(k).coeff;
        acc -= thmA_coefficient(2, n - k) * insert_sum;
    }
    return acc;
}

} // namespace mzsv
