#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "word.hpp"

namespace mzsv {

// Reproducible word generator on std::minstd_rand (x -> 48271 x mod 2^31 - 1).
// Draws are mapped to ranges by plain modulo so the sequence depends only on the
// seed, not on the standard library's distribution implementations.
class WordSampler {
public:
    explicit WordSampler(std::uint32_t seed) : rng_(seed == 0 ? 1 : seed) {}

    // Uniform on [lo, hi] up to modulo bias.
    int uniform(int lo, int hi)
    {
        if (hi < lo) {
            throw std::invalid_argument("WordSampler::uniform: empty range");
        }
        const auto span = static_cast<std::uint32_t>(hi - lo + 1);
        return lo + static_cast<int>(rng_() % span);
    }

    // Depth uniform on [1, max_depth], parts uniform on [1, max_part]; with
    // `admissible` the first part is uniform on [2, max_part] instead.
    Word word(int max_depth, int max_part, bool admissible = false)
    {
        if (max_depth < 1 || max_part < (admissible ? 2 : 1)) {
            throw std::invalid_argument("WordSampler::word: bad parameters");
        }
        const int depth = uniform(1, max_depth);
        std::vector<int> parts;
        parts.reserve(static_cast<std::size_t>(depth));
        for (int i = 0; i < depth; ++i) {
            parts.push_back(uniform(i == 0 && admissible ? 2 : 1, max_part));
        }
        return Word(std::move(parts));
    }

    // As word(), redrawing until the weight is at most max_weight.
    Word word_up_to_weight(int max_depth, int max_part, long max_weight, bool admissible = false)
    {
        if (max_weight < (admissible ? 2 : 1)) {
            throw std::invalid_argument("WordSampler::word_up_to_weight: max_weight too small");
        }
        while (true) {
            Word w = word(max_depth, max_part, admissible);
            if (w.weight() <= max_weight) {
                return w;
            }
        }
    }

private:
    std::minstd_rand rng_;
};

} // namespace mzsv
