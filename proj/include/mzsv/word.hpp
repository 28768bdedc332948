#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzsv {

// Monomial z_{k1} z_{k2} ... z_{kn} in the letters z_k = x^(k-1) y. The empty
// word is the unit 1. Ordered lexicographically by part sequence.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> parts) : Word(std::vector<int>(parts)) {}
    explicit Word(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_) {
            if (p < 1) {
                throw std::invalid_argument("Word: parts must be positive, got " + std::to_string(p));
            }
        }
    }

    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] std::size_t depth() const { return parts_.size(); }
    [[nodiscard]] long weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
    [[nodiscard]] bool admissible() const { return parts_.empty() || parts_.front() >= 2; }
    [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }

    // Concatenation.
    friend Word operator*(const Word& a, const Word& b)
    {
        std::vector<int> out = a.parts_;
        out.insert(out.end(), b.parts_.begin(), b.parts_.end());
        return Word(std::move(out));
    }

    [[nodiscard]] Word pow(unsigned n) const
    {
        Word out;
        for (unsigned i = 0; i < n; ++i) {
            out.parts_.insert(out.parts_.end(), parts_.begin(), parts_.end());
        }
        return out;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> parts_;
};

inline Word z(int k) { return Word{k}; }

// A nonempty word, i.e. the argument of a zeta value.
class Index {
public:
    Index(std::initializer_list<int> parts) : Index(Word(parts)) {}
    explicit Index(Word w) : w_(std::move(w))
    {
        if (w_.empty()) {
            throw std::invalid_argument("Index: must have at least one part");
        }
    }

    [[nodiscard]] const Word& word() const { return w_; }
    [[nodiscard]] const std::vector<int>& parts() const { return w_.parts(); }
    [[nodiscard]] bool admissible() const { return w_.admissible(); }

    friend bool operator==(const Index&, const Index&) = default;
    friend auto operator<=>(const Index&, const Index&) = default;

private:
    Word w_;
};

inline long weight(const Index& i) { return i.word().weight(); }
inline std::size_t depth(const Index& i) { return i.word().depth(); }
inline long weight(const Word& w) { return w.weight(); }
inline std::size_t depth(const Word& w) { return w.depth(); }

// Word over {x, y}, stored as a string of those letters.
using XYWord = std::string;

inline XYWord to_xy(const Word& w)
{
    XYWord out;
    for (int k : w.parts()) {
        out.append(static_cast<std::size_t>(k - 1), 'x');
        out.push_back('y');
    }
    return out;
}

// Defined only for words that are empty or end in y.
inline Word from_xy(const XYWord& s)
{
    std::vector<int> parts;
    int run = 1;
    for (char ch : s) {
        if (ch == 'x') {
            ++run;
        } else if (ch == 'y') {
            parts.push_back(run);
            run = 1;
        } else {
            throw std::invalid_argument(std::string("from_xy: unexpected letter '") + ch + "'");
        }
    }
    if (run != 1) {
        throw std::invalid_argument("from_xy: word does not end in y");
    }
    return Word(std::move(parts));
}

} // namespace mzsv
