#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bernoulli.hpp"
#include "closed_forms.hpp"
#include "cyclotomic.hpp"
#include "harmonic.hpp"
#include "io.hpp"
#include "numeric.hpp"
#include "power_series.hpp"
#include "random_words.hpp"
#include "s_map.hpp"
#include "word.hpp"

// Executable checks of the algebraic identities. Each check returns a Report
// listing every failing case with both sides rendered as text.

namespace mzsv {

struct Failure {
    json params;
    std::string lhs;
    std::string rhs;
};

struct Report {
    Report() = default;
    explicit Report(std::string name, json parameters = json::object())
        : check(std::move(name)), params(std::move(parameters))
    {
    }

    std::string check;
    json params = json::object();
    std::size_t cases = 0;
    std::vector<Failure> failures;

    [[nodiscard]] bool passed() const { return failures.empty(); }

    // Records one case; returns whether it passed.
    template <typename T>
    bool expect_equal(const T& lhs, const T& rhs, json case_params)
    {
        ++cases;
        if (lhs == rhs) {
            return true;
        }
        failures.push_back({std::move(case_params), to_text(lhs), to_text(rhs)});
        return false;
    }
};

inline void to_json(json& j, const Failure& f) { j = {{"params", f.params}, {"lhs", f.lhs}, {"rhs", f.rhs}}; }

inline void to_json(json& j, const Report& r)
{
    j = {{"check", r.check}, {"params", r.params}, {"cases", r.cases}, {"failures", r.failures}};
}

inline std::string to_text(const Report& r)
{
    std::string out = r.check + ": " + std::to_string(r.cases) + " cases, " +
                      std::to_string(r.failures.size()) + " failures\n";
    for (const auto& f : r.failures) {
        out += "  FAIL " + f.params.dump() + "\n    lhs: " + f.lhs + "\n    rhs: " + f.rhs + "\n";
    }
    return out;
}

// u*v = v*u and (u*v)*w = u*(v*w) on seeded random words of weight <= max_weight.
inline Report verify_stuffle_laws(std::uint32_t seed, unsigned trials, long max_weight, int max_depth = 4,
                                  int max_part = 4)
{
    Report r{"stuffle",
             {{"seed", seed}, {"trials", trials}, {"max_weight", max_weight}, {"max_depth", max_depth},
              {"max_part", max_part}}};
    WordSampler sample(seed);
    for (unsigned t = 0; t < trials; ++t) {
        const HarmElem u(sample.word_up_to_weight(max_depth, max_part, max_weight));
        const HarmElem v(sample.word_up_to_weight(max_depth, max_part, max_weight));
        const HarmElem w(sample.word_up_to_weight(max_depth, max_part, max_weight));
        const json p = {{"trial", t}, {"u", to_text(u)}, {"v", to_text(v)}, {"w", to_text(w)}};
        r.expect_equal(harmonic_product(u, v), harmonic_product(v, u), p);
        r.expect_equal(harmonic_product(harmonic_product(u, v), w),
                       harmonic_product(u, harmonic_product(v, w)), p);
    }
    return r;
}

namespace detail {

// sum_{i=0}^{n} prefix (z_a z_b)^i * S(z_{a+b}^(n-i))
inline HarmElem thm6_rhs(int a, int b, unsigned n, const Word& prefix)
{
    const Word ab{a, b};
    HarmElem rhs;
    for (unsigned i = 0; i <= n; ++i) {
        rhs += harmonic_product(HarmElem(prefix * ab.pow(i)), s_map(z(a + b).pow(n - i)));
    }
    return rhs;
}

} // namespace detail

// S((z_a z_b)^n) = sum_i (z_a z_b)^i * S(z_{a+b}^(n-i)) and the same with z_b
// prepended to both (z_a z_b) powers.
inline Report verify_thm6(int a, int b, unsigned n)
{
    Report r{"thm6", {{"a", a}, {"b", b}, {"n", n}}};
    const Word ab{a, b};
    r.expect_equal(s_map(ab.pow(n)), detail::thm6_rhs(a, b, n, Word{}), {{"identity", "S((ab)^n)"}});
    r.expect_equal(s_map(z(b) * ab.pow(n)), detail::thm6_rhs(a, b, n, z(b)), {{"identity", "S(b(ab)^n)"}});
    return r;
}

namespace detail {

struct Thm7Words {
    int a, b, c;

    // (z_a z_b)^i z_c (z_a z_b)^j
    [[nodiscard]] Word A(unsigned i, unsigned j) const
    {
        const Word ab{a, b};
        return ab.pow(i) * z(c) * ab.pow(j);
    }
    // (z_b z_a)^i z_c (z_b z_a)^j z_b
    [[nodiscard]] Word B(unsigned i, unsigned j) const
    {
        const Word ba{b, a};
        return ba.pow(i) * z(c) * ba.pow(j) * z(b);
    }

    // sum_{i=0}^{k} A_{i,k-i} + sum_{i=0}^{k-1} z_a B_{i,k-1-i}
    [[nodiscard]] std::vector<Word> first_family(unsigned k) const
    {
        std::vector<Word> out;
        for (unsigned i = 0; i <= k; ++i) {
            out.push_back(A(i, k - i));
        }
        for (unsigned i = 0; i < k; ++i) {
            out.push_back(z(a) * B(i, k - 1 - i));
        }
        return out;
    }

    // sum_{i=0}^{k} z_b A_{i,k-i} + sum_{i=0}^{k} B_{i,k-i}
    [[nodiscard]] std::vector<Word> second_family(unsigned k) const
    {
        std::vector<Word> out;
        for (unsigned i = 0; i <= k; ++i) {
            out.push_back(z(b) * A(i, k - i));
        }
        for (unsigned i = 0; i <= k; ++i) {
            out.push_back(B(i, k - i));
        }
        return out;
    }
};

inline HarmElem sum_of(const std::vector<Word>& words)
{
    HarmElem out;
    for (const auto& w : words) {
        out += HarmElem(w);
    }
    return out;
}

// 2 sum_k z_{(a+b)k+c} * S(prefix (z_a z_b)^(n-k)) - sum_k S(z_{a+b}^(n-k)) * family(k)
template <typename Family>
HarmElem thm7_rhs(const Thm7Words& t, unsigned n, const Word& prefix, Family family)
{
    const Word ab{t.a, t.b};
    HarmElem rhs;
    for (unsigned k = 0; k <= n; ++k) {
        const HarmElem lead(z((t.a + t.b) * static_cast<int>(k) + t.c));
        rhs += Rational(2) * harmonic_product(lead, s_map(prefix * ab.pow(n - k)));
        rhs -= harmonic_product(s_map(z(t.a + t.b).pow(n - k)), sum_of((t.*family)(k)));
    }
    return rhs;
}

} // namespace detail

// Words whose S-images make up the left side of the first identity in
// verify_thm7. For (a, b, c) = (3, 1, 2) these are the 2n+1 insertions of 2
// into (3,1)^n.
inline std::vector<Word> thm7_lhs_words(int a, int b, int c, unsigned n)
{
    return detail::Thm7Words{a, b, c}.first_family(n);
}

inline Report verify_thm7(int a, int b, int c, unsigned n)
{
    Report r{"thm7", {{"a", a}, {"b", b}, {"c", c}, {"n", n}}};
    const detail::Thm7Words t{a, b, c};
    r.expect_equal(s_map(detail::sum_of(t.first_family(n))),
                   detail::thm7_rhs(t, n, Word{}, &detail::Thm7Words::first_family), {{"identity", "A"}});
    r.expect_equal(s_map(detail::sum_of(t.second_family(n))),
                   detail::thm7_rhs(t, n, z(b), &detail::Thm7Words::second_family), {{"identity", "B"}});
    return r;
}

// Product over k = 0..m-1 of sum_j (-1)^(j-1) csc_factor(j) t^(kj) x^(2j), in
// Q[t]/(t^m - 1)[[x]] truncated at x^(2 m max_n + 1). Coefficients of x^d vanish
// modulo Phi_m unless 2m | d, and the x^(2mn) coefficient is thmA_coefficient(m, n).
inline Report verify_genfunc_thmA(unsigned m, unsigned max_n)
{
    Report r{"genfunc", {{"m", m}, {"max_n", max_n}}};
    const std::size_t order = 2UL * m * max_n + 1;
    const CycloElem zero(m);
    PowerSeries<CycloElem> product(order, zero);
    product[0] = CycloElem::monomial(m, Rational(1), 0);
    for (unsigned k = 0; k < m; ++k) {
        PowerSeries<CycloElem> factor(order, zero);
        for (unsigned j = 0; 2UL * j < order; ++j) {
            factor[2 * j] = CycloElem::monomial(m, csc_coefficient(j), static_cast<unsigned long>(k) * j);
        }
        product = series_mul(product, factor);
    }
    for (std::size_t d = 0; d < order; ++d) {
        const RatPolynomial got = cyclo_reduce(product[d]);
        RatPolynomial want;
        if (d % (2UL * m) == 0) {
            want = RatPolynomial({thmA_coefficient(m, static_cast<unsigned>(d / (2UL * m)))});
        }
        ++r.cases;
        if (!(got == want)) {
            std::string lhs;
            for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(0L, got.degree())); ++i) {
                lhs += (i ? ", " : "") + got[i].str();
            }
            r.failures.push_back({{{"degree", d}}, "[" + lhs + "]", want.is_zero() ? "0" : want[0].str()});
        }
    }
    return r;
}

// s_map against the S_1 route: every word of depth <= min(max_depth, 6) with parts
// <= max_part, then `samples` seeded random words for each deeper depth.
inline Report verify_s_consistency(unsigned max_depth, int max_part, std::uint32_t seed = 1,
                                   unsigned samples = 200)
{
    Report r{"sconsist", {{"max_depth", max_depth}, {"max_part", max_part}, {"seed", seed}, {"samples", samples}}};
    const auto check = [&r](const Word& w) {
        r.expect_equal(s_map(w), s_map_via_s1(w), {{"word", w}});
    };
    const unsigned exhaustive = std::min(max_depth, 6U);
    for (unsigned d = 1; d <= exhaustive; ++d) {
        std::vector<int> parts(d, 1);
        while (true) {
            check(Word(parts));
            std::size_t i = d;
            while (i > 0 && parts[i - 1] == max_part) {
                parts[--i] = 1;
            }
            if (i == 0) {
                break;
            }
            ++parts[i - 1];
        }
    }
    WordSampler sample(seed);
    for (unsigned d = exhaustive + 1; d <= max_depth; ++d) {
        for (unsigned s = 0; s < samples; ++s) {
            std::vector<int> parts;
            for (unsigned i = 0; i < d; ++i) {
                parts.push_back(sample.uniform(1, max_part));
            }
            check(Word(std::move(parts)));
        }
    }
    return r;
}

struct HomomorphismCase {
    NumericValue product;  // Z(w1 * w2)
    NumericValue factored; // Z(w1) Z(w2)
    double tol = 0.0;      // tolerance actually used

    [[nodiscard]] bool within_bounds() const
    {
        return std::abs(product.value - factored.value) <= product.error_bound + factored.error_bound;
    }
};

// Z(w1 * w2) against Z(w1) Z(w2). Starts at `tol` and relaxes it tenfold while the
// required cutoff exceeds max_terms, up to a tolerance of 1.
inline HomomorphismCase check_z_homomorphism(const Word& w1, const Word& w2, double tol,
                                             std::size_t max_terms = default_max_terms)
{
    while (true) {
        try {
            const NumericValue a = harm_elem_numeric(HarmElem(w1), tol / 2, max_terms);
            const NumericValue b = harm_elem_numeric(HarmElem(w2), tol / 2, max_terms);
            HomomorphismCase out;
            out.tol = tol;
            out.product = harm_elem_numeric(harmonic_product(HarmElem(w1), HarmElem(w2)), tol, max_terms);
            const double value = a.value * b.value;
            out.factored = {value, std::abs(a.value) * b.error_bound + std::abs(b.value) * a.error_bound +
                                       a.error_bound * b.error_bound + 2 * detail::unit_roundoff * std::abs(value)};
            return out;
        } catch (const ToleranceUnreachable&) {
            if (tol >= 1.0) {
                throw;
            }
            tol = std::min(1.0, tol * 10);
        }
    }
}

// Seeded admissible pairs with depth <= 3, parts <= 4 and weight <= 6.
inline Report verify_z_homomorphism(std::uint32_t seed, unsigned trials, double tol,
                                    std::size_t max_terms = default_max_terms)
{
    Report r{"zhom", {{"seed", seed}, {"trials", trials}, {"tol", tol}, {"max_terms", max_terms}}};
    WordSampler sample(seed);
    unsigned relaxed = 0;
    for (unsigned t = 0; t < trials; ++t) {
        const Word w1 = sample.word_up_to_weight(3, 4, 6, true);
        const Word w2 = sample.word_up_to_weight(3, 4, 6, true);
        const HomomorphismCase c = check_z_homomorphism(w1, w2, tol, max_terms);
        ++r.cases;
        relaxed += c.tol > tol ? 1 : 0;
        if (!c.within_bounds()) {
            r.failures.push_back({{{"trial", t}, {"w1", to_text(w1)}, {"w2", to_text(w2)}, {"tol", c.tol}},
                                  to_text(c.product), to_text(c.factored)});
        }
    }
    r.params["relaxed_cases"] = relaxed;
    return r;
}

} // namespace mzsv
