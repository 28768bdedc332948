#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "mzsv/harmonic.hpp"
#include "mzsv/io.hpp"
#include "mzsv/random_words.hpp"
#include "mzsv/s_map.hpp"
#include "mzsv/word.hpp"

using namespace mzsv;

namespace {

// u * v straight from the definition: for each length r, every pair of
// increasing maps [p] -> [r], [q] -> [r] with jointly surjective images, adding
// the parts that land on the same slot.
HarmElem stuffle_by_definition(const Word& u, const Word& v)
{
    const auto& a = u.parts();
    const auto& b = v.parts();
    const std::size_t p = a.size(), q = b.size();
    HarmElem out;
    for (std::size_t r = std::max(p, q); r <= p + q; ++r) {
        const std::uint32_t full = (1U << r) - 1;
        for (std::uint32_t ma = 0; ma <= full; ++ma) {
            if (static_cast<std::size_t>(__builtin_popcount(ma)) != p) {
                continue;
            }
            for (std::uint32_t mb = 0; mb <= full; ++mb) {
                if (static_cast<std::size_t>(__builtin_popcount(mb)) != q || (ma | mb) != full) {
                    continue;
                }
                std::vector<int> parts(r, 0);
                std::size_t ia = 0, ib = 0;
                for (std::size_t s = 0; s < r; ++s) {
                    if (ma & (1U << s)) {
                        parts[s] += a[ia++];
                    }
                    if (mb & (1U << s)) {
                        parts[s] += b[ib++];
                    }
                }
                out.add(Word(std::move(parts)), Rational(1));
            }
        }
    }
    return out;
}

// Sum over all 2^(n-1) merges of adjacent parts, by subset of cut positions.
HarmElem s_by_cuts(const Word& w)
{
    const auto& k = w.parts();
    HarmElem out;
    if (k.empty()) {
        return HarmElem::one();
    }
    const std::uint32_t cuts = 1U << (k.size() - 1);
    for (std::uint32_t mask = 0; mask < cuts; ++mask) {
        std::vector<int> parts{k[0]};
        for (std::size_t i = 1; i < k.size(); ++i) {
            if (mask & (1U << (i - 1))) {
                parts.push_back(k[i]);
            } else {
                parts.back() += k[i];
            }
        }
        out.add(Word(std::move(parts)), Rational(1));
    }
    return out;
}

HarmElem random_elem(WordSampler& s, std::minstd_rand& rng, long max_weight)
{
    HarmElem e;
    const int terms = s.uniform(1, 3);
    for (int i = 0; i < terms; ++i) {
        const long num = static_cast<long>(rng() % 9) - 4;
        const long den = static_cast<long>(rng() % 4) + 1;
        e.add(s.word_up_to_weight(4, 4, max_weight), Rational(num, den));
    }
    return e;
}

HarmElem s_inverse(const HarmElem& e)
{
    HarmElem out;
    for (const auto& [w, c] : e.terms()) {
        out += c * s_map_inverse(w);
    }
    return out;
}

} // namespace

TEST(Word, WeightDepthAdmissibility)
{
    EXPECT_EQ(weight(Index{3, 1, 3, 1}), 8);
    EXPECT_EQ(depth(Index{3, 1, 3, 1}), 4u);
    EXPECT_EQ(weight(Index{2, 3, 1}), 6);
    EXPECT_EQ(Word{4}.pow(3), (Word{4, 4, 4}));
    EXPECT_TRUE((Index{2, 1}.admissible()));
    EXPECT_FALSE((Index{1, 2}.admissible()));
    EXPECT_TRUE(Word{}.admissible());
    EXPECT_THROW(Word({2, 0}), std::invalid_argument);
    EXPECT_THROW(Index(Word{}), std::invalid_argument);
    EXPECT_LT((Word{3, 1}), (Word{4}));
}

TEST(Word, XYEncoding)
{
    EXPECT_EQ(to_xy(Word{3, 1, 2}), "xxyyxy");
    EXPECT_EQ(from_xy("xxyyxy"), (Word{3, 1, 2}));
    EXPECT_THROW(from_xy("xyx"), std::invalid_argument);
}

TEST(Stuffle, SmallProducts)
{
    EXPECT_EQ(harmonic_product(HarmElem(Word{2}), HarmElem(Word{2})),
              HarmElem(Word{2, 2}, Rational(2)) + HarmElem(Word{4}));
    const HarmElem expected = HarmElem(Word{2, 1, 2}) + HarmElem(Word{2, 2, 1}, Rational(2)) +
                              HarmElem(Word{2, 3}) + HarmElem(Word{4, 1});
    EXPECT_EQ(harmonic_product(HarmElem(Word{2, 1}), HarmElem(Word{2})), expected);
    EXPECT_EQ(stuffle_by_definition(Word{2, 1}, Word{2}), expected);
    for (int p = 1; p <= 4; ++p) {
        for (int q = 1; q <= 4; ++q) {
            EXPECT_EQ(harmonic_product(HarmElem(z(p)), HarmElem(z(q))),
                      HarmElem(Word{p, q}) + HarmElem(Word{q, p}) + HarmElem(z(p + q)));
        }
    }
}

TEST(Stuffle, UnitAndZero)
{
    const HarmElem u = HarmElem(Word{3, 1}) + HarmElem(Word{2}, Rational(-1, 2));
    EXPECT_EQ(harmonic_product(HarmElem::one(), u), u);
    EXPECT_EQ(harmonic_product(u, HarmElem::one()), u);
    EXPECT_TRUE(harmonic_product(HarmElem(), u).is_zero());
}

TEST(Stuffle, MatchesDefinitionOnRandomWords)
{
    WordSampler s(2024);
    for (int t = 0; t < 300; ++t) {
        const Word u = s.word(4, 4), v = s.word(4, 4);
        EXPECT_EQ(harmonic_product(HarmElem(u), HarmElem(v)), stuffle_by_definition(u, v))
            << to_text(u) << " * " << to_text(v);
    }
}

TEST(Stuffle, CommutativeAndAssociativeOnCombinations)
{
    WordSampler s(99);
    std::minstd_rand rng(5);
    for (int t = 0; t < 60; ++t) {
        const HarmElem u = random_elem(s, rng, 10 / 3);
        const HarmElem v = random_elem(s, rng, 10 / 3);
        const HarmElem w = random_elem(s, rng, 10 - 2 * (10 / 3));
        EXPECT_EQ(harmonic_product(u, v), harmonic_product(v, u));
        EXPECT_EQ(harmonic_product(harmonic_product(u, v), w), harmonic_product(u, harmonic_product(v, w)));
        EXPECT_EQ(harmonic_product(u, v + w), harmonic_product(u, v) + harmonic_product(u, w));
    }
}

TEST(Stuffle, GradingAndAdmissibility)
{
    WordSampler s(31);
    for (int t = 0; t < 200; ++t) {
        const Word u = s.word(4, 5, true), v = s.word(4, 5, true);
        const HarmElem prod = harmonic_product(HarmElem(u), HarmElem(v));
        for (const auto& [w, c] : prod.terms()) {
            EXPECT_EQ(w.weight(), u.weight() + v.weight());
            EXPECT_GE(w.depth(), std::max(u.depth(), v.depth()));
            EXPECT_LE(w.depth(), u.depth() + v.depth());
            EXPECT_TRUE(w.admissible());
            EXPECT_GT(c, Rational(0));
        }
    }
}

TEST(SMap, Examples)
{
    EXPECT_EQ(s_map(Word{}), HarmElem::one());
    EXPECT_EQ(s_map(Word{5}), HarmElem(Word{5}));
    EXPECT_EQ(s_map(Word{3, 1}), HarmElem(Word{4}) + HarmElem(Word{3, 1}));
    EXPECT_EQ(s_map(Word{1, 1, 1}), HarmElem(Word{3}) + HarmElem(Word{2, 1}) + HarmElem(Word{1, 2}) +
                                        HarmElem(Word{1, 1, 1}));
    const HarmElem s3131 = s_map(Word{3, 1, 3, 1});
    EXPECT_EQ(s3131.size(), 8u);
    EXPECT_EQ(s3131.coefficient(Word{4, 4}), Rational(1));
}

TEST(SMap, SumOfAllMergesWithUnitCoefficients)
{
    WordSampler s(17);
    for (int t = 0; t < 200; ++t) {
        const Word w = s.word(9, 3);
        const HarmElem img = s_map(w);
        EXPECT_EQ(img, s_by_cuts(w));
        Rational total;
        for (const auto& [x, c] : img.terms()) {
            EXPECT_EQ(x.weight(), w.weight());
            total += c;
        }
        EXPECT_EQ(total, Rational(BigInt(1) << static_cast<mp_bitcnt_t>(w.depth() - 1)));
    }
    // Distinct parts avoid collisions, so the image has exactly 2^(n-1) words.
    EXPECT_EQ(s_map(Word{1, 2, 4, 8, 16}).size(), 16u);
}

TEST(SMap, AgreesWithS1RouteUpToDepthEight)
{
    WordSampler s(8);
    for (int t = 0; t < 300; ++t) {
        const Word w = s.word(8, 4);
        EXPECT_EQ(s_map(w), s_map_via_s1(w)) << to_text(w);
    }
    EXPECT_THROW(s_map_via_s1(Word{}), std::invalid_argument);
}

TEST(SMap, PreservesAdmissibility)
{
    WordSampler s(3);
    for (int t = 0; t < 200; ++t) {
        const Word w = s.word(7, 4, true);
        const HarmElem img = s_map(w);
        for (const auto& [x, c] : img.terms()) {
            EXPECT_TRUE(x.admissible());
        }
    }
}

TEST(SMap, InverseUndoesS)
{
    WordSampler s(12);
    for (int t = 0; t < 100; ++t) {
        const Word w = s.word(6, 4);
        EXPECT_EQ(s_inverse(s_map(w)), HarmElem(w));
        EXPECT_EQ(s_map(s_map_inverse(w)), HarmElem(w));
    }
}

TEST(SMap, LinearOnCombinations)
{
    const HarmElem e = HarmElem(Word{2, 1}, Rational(3)) + HarmElem(Word{1, 1}, Rational(-1, 2));
    EXPECT_EQ(s_map(e), Rational(3) * s_map(Word{2, 1}) - Rational(1, 2) * s_map(Word{1, 1}));
}

TEST(SMap, TelescopingDecompositions)
{
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            const Word ab{a, b};
            for (unsigned n = 1; n <= 4; ++n) {
                HarmElem rhs5, rhs6, rhs7;
                for (unsigned j = 0; j < n; ++j) {
                    rhs5 += concat(z((a + b) * static_cast<int>(j) + a), s_map(z(b) * ab.pow(n - 1 - j)));
                }
                for (unsigned j = 1; j <= n; ++j) {
                    rhs5 += concat(z((a + b) * static_cast<int>(j)), s_map(ab.pow(n - j)));
                }
                for (unsigned j = 0; j <= n; ++j) {
                    rhs6 += concat(z((a + b) * static_cast<int>(j) + b), s_map(ab.pow(n - j)));
                }
                for (unsigned j = 1; j <= n; ++j) {
                    rhs6 += concat(z((a + b) * static_cast<int>(j)), s_map(z(b) * ab.pow(n - j)));
                    rhs7 += concat(z((a + b) * static_cast<int>(j)), s_map(z(a + b).pow(n - j)));
                }
                EXPECT_EQ(s_map(ab.pow(n)), rhs5) << a << "," << b << "," << n;
                EXPECT_EQ(s_map(z(b) * ab.pow(n)), rhs6) << a << "," << b << "," << n;
                EXPECT_EQ(s_map(z(a + b).pow(n)), rhs7) << a << "," << b << "," << n;
            }
        }
    }
}

TEST(Insertions, Enumeration)
{
    const auto one = insertions(1);
    ASSERT_EQ(one.size(), 3u);
    EXPECT_EQ(one[0], (Index{2, 3, 1}));
    EXPECT_EQ(one[1], (Index{3, 2, 1}));
    EXPECT_EQ(one[2], (Index{3, 1, 2}));
    for (unsigned n = 1; n <= 5; ++n) {
        const auto list = insertions(n);
        EXPECT_EQ(list.size(), 2 * n + 1);
        for (const auto& i : list) {
            EXPECT_EQ(weight(i), 4L * n + 2);
            EXPECT_EQ(depth(i), 2 * n + 1);
            EXPECT_TRUE(i.admissible());
        }
    }
    EXPECT_THROW(insertions(0), std::invalid_argument);
}

TEST(WordSampler, Reproducible)
{
    WordSampler a(42), b(42), c(43);
    bool differs = false;
    for (int t = 0; t < 50; ++t) {
        const Word wa = a.word(5, 4), wb = b.word(5, 4), wc = c.word(5, 4);
        EXPECT_EQ(wa, wb);
        differs = differs || !(wa == wc);
        EXPECT_LE(wa.depth(), 5u);
        for (int p : wa.parts()) {
            EXPECT_GE(p, 1);
            EXPECT_LE(p, 4);
        }
    }
    EXPECT_TRUE(differs);
    const Word w = a.word_up_to_weight(3, 4, 6, true);
    EXPECT_TRUE(w.admissible());
    EXPECT_LE(w.weight(), 6);
}
