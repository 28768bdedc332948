#include <cstdint>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "mzsv/bernoulli.hpp"
#include "mzsv/compositions.hpp"
#include "mzsv/cyclotomic.hpp"
#include "mzsv/power_series.hpp"
#include "mzsv/rational.hpp"

using namespace mzsv;

namespace {

// Akiyama-Tanigawa: yields B_n with the B_1 = +1/2 convention.
Rational akiyama_tanigawa(unsigned n)
{
    std::vector<Rational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = Rational(1, static_cast<long>(m) + 1);
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
        }
    }
    return a[0];
}

// Coefficients of x / sin x up to x^(2 max) by inverting sin(x)/x.
std::vector<Rational> x_over_sin(unsigned max)
{
    std::vector<Rational> s(max + 1);
    for (unsigned k = 0; k <= max; ++k) {
        const Rational v(BigInt(1), factorial(2 * k + 1));
        s[k] = k % 2 == 0 ? v : -v;
    }
    std::vector<Rational> inv(max + 1);
    inv[0] = Rational(1);
    for (unsigned k = 1; k <= max; ++k) {
        Rational acc;
        for (unsigned i = 1; i <= k; ++i) {
            acc += s[i] * inv[k - i];
        }
        inv[k] = -acc;
    }
    return inv;
}

struct RationalGen {
    std::minstd_rand rng;
    explicit RationalGen(std::uint32_t seed) : rng(seed) {}
    Rational next(bool nonzero = false)
    {
        while (true) {
            const long num = static_cast<long>(rng() % 41) - 20;
            const long den = static_cast<long>(rng() % 12) + 1;
            if (!nonzero || num != 0) {
                return Rational(num, den);
            }
        }
    }
};

IntPolynomial int_poly(std::vector<long> c)
{
    std::vector<BigInt> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return IntPolynomial(std::move(v));
}

unsigned euler_phi(unsigned m)
{
    unsigned count = 0;
    for (unsigned k = 1; k <= m; ++k) {
        unsigned a = k, b = m;
        while (b != 0) {
            const unsigned r = a % b;
            a = b;
            b = r;
        }
        count += a == 1 ? 1 : 0;
    }
    return count;
}

} // namespace

// First in the file so the caches start empty.
TEST(Caches, ConcurrentFillMatchesSerial)
{
    std::vector<std::vector<Rational>> bern(4);
    std::vector<std::vector<IntPolynomial>> cyclo(4);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < 4; ++t) {
        pool.emplace_back([t, &bern, &cyclo] {
            for (unsigned n = 0; n <= 80; ++n) {
                bern[t].push_back(bernoulli(t % 2 == 0 ? n : 80 - n));
            }
            for (unsigned m = 1; m <= 30; ++m) {
                cyclo[t].push_back(cyclotomic_polynomial(t % 2 == 0 ? m : 31 - m));
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (std::size_t t = 0; t < 4; ++t) {
        for (unsigned n = 0; n <= 80; ++n) {
            const unsigned k = t % 2 == 0 ? n : 80 - n;
            EXPECT_EQ(bern[t][n], k == 1 ? -akiyama_tanigawa(1) : akiyama_tanigawa(k));
        }
        for (unsigned m = 0; m < 30; ++m) {
            EXPECT_EQ(cyclo[t][m], cyclo[t % 2][m]);
        }
    }
}

TEST(Rational, CanonicalForm)
{
    EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
    EXPECT_EQ(Rational(6, -4).str(), "-3/2");
    EXPECT_EQ(Rational(10, 5).str(), "2");
    EXPECT_EQ(Rational::parse("-14/21"), Rational(-2, 3));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
}

TEST(Rational, FieldAxiomsOnRandomElements)
{
    RationalGen gen(7);
    for (int t = 0; t < 500; ++t) {
        const Rational a = gen.next(), b = gen.next(), c = gen.next();
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
            EXPECT_EQ(b * b.inverse(), Rational(1));
        }
        EXPECT_EQ(a < b, a.to_double() < b.to_double());
    }
}

TEST(Rational, CombinatorialHelpers)
{
    EXPECT_EQ(factorial(0), BigInt(1));
    EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
    EXPECT_EQ(pow2(70), BigInt("1180591620717411303424"));
    for (unsigned n = 1; n <= 30; ++n) {
        for (unsigned k = 1; k < n; ++k) {
            EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
        EXPECT_EQ(binomial(n, 0), BigInt(1));
        EXPECT_EQ(binomial(n, n), BigInt(1));
    }
}

TEST(Bernoulli, KnownValues)
{
    EXPECT_EQ(bernoulli(0), Rational(1));
    EXPECT_EQ(bernoulli(1), Rational(-1, 2));
    EXPECT_EQ(bernoulli(2), Rational(1, 6));
    EXPECT_EQ(bernoulli(4), Rational(-1, 30));
    EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
    EXPECT_EQ(bernoulli(3), Rational(0));
    EXPECT_EQ(bernoulli(101), Rational(0));
}

TEST(Bernoulli, MatchesAkiyamaTanigawa)
{
    for (unsigned n = 0; n <= 60; ++n) {
        const Rational oracle = n == 1 ? -akiyama_tanigawa(1) : akiyama_tanigawa(n);
        EXPECT_EQ(bernoulli(n), oracle) << "n = " << n;
    }
}

TEST(Bernoulli, CosecantCoefficientsMatchSeriesInversion)
{
    const auto inv = x_over_sin(15);
    for (unsigned n = 0; n <= 15; ++n) {
        EXPECT_EQ(csc_coefficient(n), inv[n]) << "n = " << n;
    }
    EXPECT_EQ(csc_coefficient(2), Rational(7, 360));
}

TEST(Cyclotomic, SmallPolynomials)
{
    EXPECT_EQ(cyclotomic_polynomial(1), int_poly({-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), int_poly({1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(3), int_poly({1, 1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), int_poly({1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(6), int_poly({1, -1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), int_poly({1, 0, -1, 0, 1}));
    EXPECT_THROW(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST(Cyclotomic, ProductOverDivisorsIsTmMinusOne)
{
    for (unsigned m = 1; m <= 12; ++m) {
        IntPolynomial prod = int_poly({1});
        for (unsigned d = 1; d <= m; ++d) {
            if (m % d == 0) {
                prod = prod * cyclotomic_polynomial(d);
            }
        }
        std::vector<long> want(m + 1, 0);
        want[0] = -1;
        want[m] = 1;
        EXPECT_EQ(prod, int_poly(want)) << "m = " << m;
        EXPECT_EQ(cyclotomic_polynomial(m).degree(), static_cast<long>(euler_phi(m)));
    }
}

TEST(Cyclotomic, RootOfUnitySums)
{
    for (unsigned m = 2; m <= 12; ++m) {
        CycloElem all(m, std::vector<Rational>(m, Rational(1)));
        EXPECT_TRUE(cyclo_reduce(all).is_zero()) << "m = " << m;
    }
    EXPECT_EQ(cyclo_rational_value(CycloElem(1, {Rational(5, 3)})), Rational(5, 3));
    // omega^2 = -1 for m = 4.
    EXPECT_EQ(cyclo_rational_value(CycloElem::monomial(4, Rational(3), 2)), Rational(-3));
    EXPECT_THROW(cyclo_rational_value(CycloElem::monomial(3, Rational(1), 1)), NotRational);
}

TEST(Cyclotomic, ReductionIsRingHomomorphism)
{
    RationalGen gen(11);
    for (unsigned m = 1; m <= 9; ++m) {
        const auto phi = cyclotomic_polynomial(m);
        std::vector<Rational> phi_q(phi.coeffs().begin(), phi.coeffs().end());
        const RatPolynomial phi_r(phi_q);
        for (int t = 0; t < 20; ++t) {
            std::vector<Rational> ca, cb;
            for (unsigned j = 0; j < m; ++j) {
                ca.push_back(gen.next());
                cb.push_back(gen.next());
            }
            const CycloElem a(m, ca), b(m, cb);
            const RatPolynomial ra = cyclo_reduce(a), rb = cyclo_reduce(b);
            EXPECT_EQ(cyclo_reduce(a * b), (ra * rb).divmod_monic(phi_r).remainder);
            std::vector<Rational> sum;
            for (unsigned j = 0; j < m; ++j) {
                sum.push_back(ca[j] + cb[j]);
            }
            EXPECT_EQ(cyclo_reduce(a + b), cyclo_reduce(CycloElem(m, sum)));
            EXPECT_EQ(a * b, b * a);
        }
    }
}

TEST(CycloElem, RejectsMismatchedModuli)
{
    EXPECT_THROW(CycloElem(2) + CycloElem(3), std::invalid_argument);
    EXPECT_THROW(CycloElem(3, {Rational(1)}), std::invalid_argument);
}

TEST(PowerSeries, ExponentialSquared)
{
    const std::size_t order = 12;
    std::vector<Rational> e1, e2;
    for (unsigned k = 0; k < order; ++k) {
        e1.emplace_back(BigInt(1), factorial(k));
        e2.emplace_back(pow2(k), factorial(k));
    }
    const PowerSeries<Rational> a(e1);
    EXPECT_EQ(series_mul(a, a), PowerSeries<Rational>(e2));
}

TEST(PowerSeries, TruncationAndRingChecks)
{
    const PowerSeries<Rational> a(4, Rational(1));
    const PowerSeries<Rational> b(5, Rational(1));
    EXPECT_THROW(series_mul(a, b), std::invalid_argument);
    const PowerSeries<CycloElem> c(3, CycloElem(2)), d(3, CycloElem(3));
    EXPECT_THROW(series_mul(c, d), std::invalid_argument);
    // (1 + x + x^2 + x^3)^2 truncated at x^4: 1, 2, 3, 4.
    const auto sq = series_mul(a, a);
    EXPECT_EQ(sq[3], Rational(4));
    EXPECT_THROW(PowerSeries<Rational>(std::vector<Rational>{}), std::invalid_argument);
}

TEST(CompositionIterator, CountsAndUniqueness)
{
    for (unsigned s = 1; s <= 5; ++s) {
        for (unsigned t = 0; t <= 7; ++t) {
            CompositionIterator it(s, t);
            std::vector<unsigned> first(s, 0);
            first[0] = t;
            EXPECT_EQ(it.current(), first);
            std::set<std::vector<unsigned>> seen;
            do {
                unsigned sum = 0;
                for (unsigned x : it.current()) {
                    sum += x;
                }
                EXPECT_EQ(sum, t);
                seen.insert(it.current());
            } while (it.next());
            EXPECT_EQ(BigInt(static_cast<unsigned long>(seen.size())), binomial(t + s - 1, s - 1));
        }
    }
    EXPECT_THROW(CompositionIterator(0, 1), std::invalid_argument);
}
