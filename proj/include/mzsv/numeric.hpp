#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "harmonic.hpp"
#include "rational.hpp"
#include "word.hpp"

// Floating-point evaluation of nested zeta sums with explicit error bounds.
//
// The truncated sum runs the outer variable up to a cutoff N. The remainder is
// bounded as follows. For the inner indices (k_2, ..., k_d) drop the ordering
// constraints between maximal runs of equal exponents; a run of length L with
// exponent k and power sum p = sum_{n<=m} n^(-k) contributes at most p^L / L!
// (strict sums, elementary symmetric function) or p (p+1) ... (p+L-1) / L!
// (non-strict sums, complete homogeneous function, all variables <= 1). With
// p <= 1 + ln m for k = 1 and p <= 1 + 1/(k-1) otherwise, the inner sum is at most
// Q(1 + ln m) for a polynomial Q with non-negative coefficients. The tail is then
// at most sum_j q_j * integral_N^inf (1 + ln x)^j x^(-k_1) dx, in closed form.

namespace mzsv {

struct NumericValue {
    double value = 0.0;
    double error_bound = 0.0;
};

class ToleranceUnreachable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double default_tolerance = 1e-8;
inline constexpr std::size_t default_max_terms = 10'000'000;

namespace detail {

inline constexpr double unit_roundoff = std::numeric_limits<double>::epsilon() / 2;

using Poly = std::vector<double>;

inline Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Polynomial Q(u) with P_inner(m) <= Q(1 + ln m) for every m >= 1.
inline Poly inner_sum_bound(const std::vector<int>& k, bool star)
{
    Poly q{1.0};
    std::size_t i = 1;
    while (i < k.size()) {
        std::size_t j = i;
        while (j < k.size() && k[j] == k[i]) {
            ++j;
        }
        const auto len = static_cast<unsigned>(j - i);
        const Poly p = k[i] == 1 ? Poly{0.0, 1.0} : Poly{1.0 + 1.0 / (k[i] - 1)};
        Poly run{1.0};
        for (unsigned r = 0; r < len; ++r) {
            Poly factor = p;
            if (star) {
                factor[0] += r;
            }
            run = poly_mul(run, factor);
        }
        double fact = 1.0;
        for (unsigned r = 2; r <= len; ++r) {
            fact *= r;
        }
        for (auto& c : run) {
            c /= fact;
        }
        q = poly_mul(q, run);
        i = j;
    }
    return q;
}

// sum_j q_j * N^(-s) sum_{i=0}^{j} j!/(j-i)! u0^(j-i) / s^(i+1), u0 = 1 + ln N, s = k_1 - 1.
inline double tail_bound(const Poly& q, int k1, double cutoff)
{
    const double s = k1 - 1;
    const double u0 = 1.0 + std::log(cutoff);
    const double scale = std::pow(cutoff, -s);
    double total = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q[j] == 0.0) {
            continue;
        }
        double falling = 1.0;
        double acc = 0.0;
        for (std::size_t i = 0; i <= j; ++i) {
            acc += falling * std::pow(u0, static_cast<double>(j - i)) / std::pow(s, static_cast<double>(i + 1));
            falling *= static_cast<double>(j - i);
        }
        total += q[j] * acc;
    }
    return total * scale;
}

// Smallest cutoff N with tail_bound(N) <= tol, restricted to the range where the
// summand (1 + ln x)^j x^(-k_1) is decreasing so the integral comparison holds.
inline std::size_t choose_cutoff(const Poly& q, int k1, double tol, std::size_t max_terms,
                                 double& bound_out)
{
    const double jmax = static_cast<double>(q.size() - 1);
    const auto lo_start = static_cast<std::size_t>(std::ceil(std::exp(jmax / k1 - 1.0)));
    std::size_t lo = std::max<std::size_t>(1, lo_start);
    if (lo > max_terms) {
        throw ToleranceUnreachable("cutoff needed for a valid tail bound exceeds max_terms");
    }
    const double at_cap = tail_bound(q, k1, static_cast<double>(max_terms));
    if (!(at_cap <= tol)) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "tail bound at max_terms = %zu is %.3g, above tolerance %.3g", max_terms,
                      at_cap, tol);
        throw ToleranceUnreachable(msg);
    }
    std::size_t hi = max_terms;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (tail_bound(q, k1, static_cast<double>(mid)) <= tol) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    bound_out = tail_bound(q, k1, static_cast<double>(lo));
    return lo;
}

// P_j(M) = sum over M >= m_j > m_{j+1} > ... (or >= for star) of prod_i m_i^(-k_i),
// advanced one M at a time so the total work is O(N * depth).
inline double nested_sum(const std::vector<int>& k, bool star, std::size_t cutoff)
{
    const std::size_t d = k.size();
    int kmax = 0;
    for (int e : k) {
        kmax = std::max(kmax, e);
    }
    std::vector<double> partial(d + 1, 0.0);
    partial[d] = 1.0;
    std::vector<double> inv_pow(static_cast<std::size_t>(kmax) + 1, 1.0);
    for (std::size_t m = 1; m <= cutoff; ++m) {
        const double inv = 1.0 / static_cast<double>(m);
        for (int e = 1; e <= kmax; ++e) {
            inv_pow[static_cast<std::size_t>(e)] = inv_pow[static_cast<std::size_t>(e) - 1] * inv;
        }
        if (star) {
            for (std::size_t j = d; j-- > 0;) {
                partial[j] += inv_pow[static_cast<std::size_t>(k[j])] * partial[j + 1];
            }
        } else {
            for (std::size_t j = 0; j < d; ++j) {
                partial[j] += inv_pow[static_cast<std::size_t>(k[j])] * partial[j + 1];
            }
        }
    }
    return partial[0];
}

inline NumericValue evaluate(const Index& index, double tol, std::size_t max_terms, bool star)
{
    if (!index.admissible()) {
        throw std::invalid_argument("zeta value of a non-admissible index (first part 1) diverges");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    const auto& k = index.parts();
    const Poly q = inner_sum_bound(k, star);
    double tail = 0.0;
    const std::size_t cutoff = choose_cutoff(q, k.front(), tol, max_terms, tail);
    const double value = nested_sum(k, star, cutoff);

    // Each partial sum is a recursive sum of `cutoff` products, each carrying the
    // relative error of m^(-k) and of the inner partial sum.
    double steps = 0.0;
    for (int e : k) {
        steps += static_cast<double>(e) + 2.0 + static_cast<double>(cutoff);
    }
    const double rounding = 1.01 * steps * unit_roundoff * value;
    return {value, tail + rounding};
}

} // namespace detail

// zeta(k_1, ..., k_d) = sum_{m_1 > ... > m_d > 0} prod m_i^(-k_i); requires k_1 >= 2.
inline NumericValue mzv_numeric(const Index& index, double tol = default_tolerance,
                                std::size_t max_terms = default_max_terms)
{
    return detail::evaluate(index, tol, max_terms, false);
}

// zeta*(k_1, ..., k_d), the same sum over m_1 >= ... >= m_d > 0.
inline NumericValue mzsv_numeric(const Index& index, double tol = default_tolerance,
                                 std::size_t max_terms = default_max_terms)
{
    return detail::evaluate(index, tol, max_terms, true);
}

// Z applied to a combination of admissible words; the empty word evaluates to 1.
inline NumericValue harm_elem_numeric(const HarmElem& e, double tol = default_tolerance,
                                      std::size_t max_terms = default_max_terms)
{
    NumericValue out;
    if (e.is_zero()) {
        return out;
    }
    const double terms = static_cast<double>(e.size());
    double magnitude = 0.0;
    for (const auto& [w, c] : e.terms()) {
        const double coeff = c.to_double();
        const double weight = std::max(1.0, std::abs(coeff));
        NumericValue v{1.0, 0.0};
        if (!w.empty()) {
            v = mzv_numeric(Index(w), tol / (terms * weight), max_terms);
        }
        out.value += coeff * v.value;
        out.error_bound += std::abs(coeff) * v.error_bound + 2.0 * detail::unit_roundoff * std::abs(coeff * v.value);
        magnitude += std::abs(coeff * v.value);
    }
    out.error_bound += 1.01 * terms * detail::unit_roundoff * magnitude;
    return out;
}

// q * pi^w in floating point.
inline NumericValue pi_multiple_numeric(const PiMultiple& p)
{
    double value = p.coeff.to_double();
    for (unsigned i = 0; i < p.pi_power; ++i) {
        value *= std::numbers::pi;
    }
    const double rel = (2.0 * p.pi_power + 4.0) * detail::unit_roundoff;
    return {value, std::abs(value) * rel};
}

} // namespace mzsv
