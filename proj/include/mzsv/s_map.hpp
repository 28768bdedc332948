#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "harmonic.hpp"
#include "rational.hpp"
#include "word.hpp"

namespace mzsv {

// S(z_{k1} ... z_{kn}) = sum_{j=1}^{n} z_{k1+...+kj} S(z_{k(j+1)} ... z_{kn}), S(1) = 1.
// The image is the sum of all 2^(n-1) ways of merging adjacent parts, each with
// coefficient 1. Suffix images are computed once each, innermost first.
inline HarmElem s_map(const Word& w)
{
    const auto& k = w.parts();
    const std::size_t n = k.size();
    // suffix[i] = S(z_{k_i} ... z_{k_n}) in 0-based positions.
    std::vector<HarmElem> suffix(n + 1);
    suffix[n] = HarmElem::one();
    for (std::size_t i = n; i-- > 0;) {
        HarmElem acc;
        int merged = 0;
        for (std::size_t j = i; j < n; ++j) {
            merged += k[j];
            acc += concat(z(merged), suffix[j + 1]);
        }
        suffix[i] = std::move(acc);
    }
    return suffix[0];
}

inline HarmElem s_map(const HarmElem& e)
{
    HarmElem out;
    for (const auto& [w, c] : e.terms()) {
        out += c * s_map(w);
    }
    return out;
}

// Inverse of S: signed sum over merges, (-1)^(n - depth) on each merged word
// (Moebius inversion on the refinement order of compositions).
inline HarmElem s_map_inverse(const Word& w)
{
    const auto& k = w.parts();
    const std::size_t n = k.size();
    std::vector<HarmElem> suffix(n + 1);
    suffix[n] = HarmElem::one();
    for (std::size_t i = n; i-- > 0;) {
        HarmElem acc;
        int merged = 0;
        for (std::size_t j = i; j < n; ++j) {
            merged += k[j];
            const Rational sign((j - i) % 2 == 0 ? 1 : -1);
            acc += sign * concat(z(merged), suffix[j + 1]);
        }
        suffix[i] = std::move(acc);
    }
    return suffix[0];
}

using XYElem = std::map<XYWord, Rational>;

// Image of an xy-word under the automorphism x -> x, y -> x + y: the 2^(#y)
// words obtained by independently replacing each y by x or y.
inline XYElem s1_substitute(const XYWord& w)
{
    std::vector<XYWord> current{XYWord{}};
    for (char ch : w) {
        if (ch != 'x' && ch != 'y') {
            throw std::invalid_argument(std::string("s1_substitute: unexpected letter '") + ch + "'");
        }
        std::vector<XYWord> next;
        next.reserve(current.size() * (ch == 'y' ? 2 : 1));
        for (const auto& prefix : current) {
            next.push_back(prefix + 'x');
            if (ch == 'y') {
                next.push_back(prefix + 'y');
            }
        }
        current = std::move(next);
    }
    XYElem out;
    for (auto& s : current) {
        out[std::move(s)] += Rational(1);
    }
    return out;
}

// S(F y) = S_1(F) y.
inline HarmElem s_map_via_s1(const Word& w)
{
    if (w.empty()) {
        throw std::invalid_argument("s_map_via_s1: word must be nonempty");
    }
    XYWord xy = to_xy(w);
    xy.pop_back();
    HarmElem out;
    for (const auto& [f, c] : s1_substitute(xy)) {
        out.add(from_xy(f + 'y'), c);
    }
    return out;
}

// The 2n+1 indices obtained by inserting a part 2 into (3,1)^n, ordered by
// insertion position 0..2n.
inline std::vector<Index> insertions(unsigned n)
{
    if (n == 0) {
        throw std::invalid_argument("insertions: n must be positive");
    }
    const auto base = Word{3, 1}.pow(n).parts();
    std::vector<Index> out;
    out.reserve(2 * n + 1);
    for (std::size_t pos = 0; pos <= base.size(); ++pos) {
        std::vector<int> parts(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(pos));
        parts.push_back(2);
        parts.insert(parts.end(), base.begin() + static_cast<std::ptrdiff_t>(pos), base.end());
        out.emplace_back(Word(std::move(parts)));
    }
    return out;
}

} // namespace mzsv
