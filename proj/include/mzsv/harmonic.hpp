#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "word.hpp"

namespace mzsv {

// Finite Q-linear combination of words: an element of H^1. Zero coefficients are
// never stored, so equality is equality of the term maps.
class HarmElem {
public:
    using Terms = std::map<Word, Rational>;

    HarmElem() = default;
    HarmElem(const Word& w) { add(w, Rational(1)); }
    HarmElem(const Word& w, const Rational& c) { add(w, c); }

    static HarmElem one() { return HarmElem(Word{}); }

    [[nodiscard]] const Terms& terms() const& { return terms_; }
    // By value on temporaries, so `for (... : f().terms())` stays valid.
    [[nodiscard]] Terms terms() && { return std::move(terms_); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] Rational coefficient(const Word& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Word& w, const Rational& c)
    {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    HarmElem& operator+=(const HarmElem& o)
    {
        for (const auto& [w, c] : o.terms_) {
            add(w, c);
        }
        return *this;
    }
    HarmElem& operator-=(const HarmElem& o)
    {
        for (const auto& [w, c] : o.terms_) {
            add(w, -c);
        }
        return *this;
    }
    friend HarmElem operator+(HarmElem a, const HarmElem& b) { return a += b; }
    friend HarmElem operator-(HarmElem a, const HarmElem& b) { return a -= b; }

    friend HarmElem operator*(const Rational& s, const HarmElem& e)
    {
        HarmElem out;
        if (s.is_zero()) {
            return out;
        }
        for (const auto& [w, c] : e.terms_) {
            out.terms_.emplace(w, s * c);
        }
        return out;
    }

    friend bool operator==(const HarmElem&, const HarmElem&) = default;

private:
    Terms terms_;
};

// Concatenation product of H (not the harmonic product).
inline HarmElem concat(const Word& left, const HarmElem& e, const Word& right = Word{})
{
    HarmElem out;
    for (const auto& [w, c] : e.terms()) {
        out.add(left * w * right, c);
    }
    return out;
}

inline HarmElem concat(const HarmElem& a, const HarmElem& b)
{
    HarmElem out;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            out.add(wa * wb, ca * cb);
        }
    }
    return out;
}

using WordCounts = std::map<Word, std::uint64_t>;

// Harmonic product of two words with integer multiplicities. Dynamic programme
// over suffix pairs (u[i:], v[j:]):
//   z_p u' * z_q v' = z_p (u' * z_q v') + z_q (z_p u' * v') + z_{p+q} (u' * v').
inline WordCounts harmonic_product_words(const Word& u, const Word& v)
{
    using Parts = std::vector<int>;
    using Table = std::map<Parts, std::uint64_t>;
    const auto& a = u.parts();
    const auto& b = v.parts();
    const std::size_t p = a.size();
    const std::size_t q = b.size();

    const auto prepend_into = [](Table& dst, int letter, const Table& src) {
        for (const auto& [w, n] : src) {
            Parts out;
            out.reserve(w.size() + 1);
            out.push_back(letter);
            out.insert(out.end(), w.begin(), w.end());
            dst[std::move(out)] += n;
        }
    };

    // next[j] = table for (i + 1, j); cur[j] = table for (i, j).
    std::vector<Table> next(q + 1);
    for (std::size_t j = 0; j <= q; ++j) {
        next[j].emplace(Parts(b.begin() + static_cast<std::ptrdiff_t>(j), b.end()), 1);
    }
    for (std::size_t i = p; i-- > 0;) {
        std::vector<Table> cur(q + 1);
        cur[q].emplace(Parts(a.begin() + static_cast<std::ptrdiff_t>(i), a.end()), 1);
        for (std::size_t j = q; j-- > 0;) {
            Table t;
            prepend_into(t, a[i], next[j]);
            prepend_into(t, b[j], cur[j + 1]);
            prepend_into(t, a[i] + b[j], next[j + 1]);
            cur[j] = std::move(t);
        }
        next = std::move(cur);
    }

    WordCounts out;
    for (auto& [w, n] : next[0]) {
        out.emplace(Word(w), n);
    }
    return out;
}

// Bilinear extension of the word product.
inline HarmElem harmonic_product(const HarmElem& u, const HarmElem& v)
{
    HarmElem out;
    for (const auto& [wu, cu] : u.terms()) {
        for (const auto& [wv, cv] : v.terms()) {
            const Rational c = cu * cv;
            for (const auto& [w, n] : harmonic_product_words(wu, wv)) {
                out.add(w, c * Rational(static_cast<long>(n)));
            }
        }
    }
    return out;
}

} // namespace mzsv
