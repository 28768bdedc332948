#pragma once

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "harmonic.hpp"
#include "numeric.hpp"
#include "rational.hpp"
#include "word.hpp"

// Text and JSON forms of the library's values.
//
// Canonical term order for printing is descending lexicographic order of the part
// sequence, which lists S(z_{k1} ... z_{kn}) fully merged word first:
// "z4 + z3 z1".

namespace mzsv {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t part, std::size_t column, const std::string& reason)
        : std::runtime_error("part " + std::to_string(part) + " (column " + std::to_string(column) +
                             "): " + reason),
          part_(part), column_(column), reason_(reason)
    {
    }

    // 1-based position of the offending part and character.
    [[nodiscard]] std::size_t part() const { return part_; }
    [[nodiscard]] std::size_t column() const { return column_; }
    [[nodiscard]] const std::string& reason() const { return reason_; }

private:
    std::size_t part_;
    std::size_t column_;
    std::string reason_;
};

// Comma-separated positive integers, whitespace around parts tolerated.
inline Index parse_index(std::string_view s)
{
    std::vector<int> parts;
    std::size_t pos = 0;
    std::size_t part = 1;
    const auto skip_space = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
            ++pos;
        }
    };
    skip_space();
    if (pos == s.size()) {
        throw ParseError(1, pos + 1, "empty index");
    }
    while (true) {
        skip_space();
        const std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            throw ParseError(part, pos + 1, "parts must be positive integers without sign");
        }
        long value = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            value = value * 10 + (s[pos] - '0');
            if (value > 1'000'000) {
                throw ParseError(part, start + 1, "part too large");
            }
            ++pos;
        }
        if (pos == start) {
            throw ParseError(part, pos + 1, pos == s.size() ? "missing part (trailing comma?)"
                                                            : "expected a positive integer");
        }
        if (value == 0) {
            throw ParseError(part, start + 1, "parts must be positive, got 0");
        }
        parts.push_back(static_cast<int>(value));
        skip_space();
        if (pos == s.size()) {
            break;
        }
        if (s[pos] != ',') {
            throw ParseError(part, pos + 1, std::string("unexpected character '") + s[pos] + "'");
        }
        ++pos;
        ++part;
    }
    return Index(Word(std::move(parts)));
}

inline std::string format_index(const Index& i)
{
    std::string out;
    for (int p : i.parts()) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(p);
    }
    return out;
}

// "z3 z1"; the empty word is "1".
inline std::string to_text(const Word& w)
{
    if (w.empty()) {
        return "1";
    }
    std::string out;
    for (int p : w.parts()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += 'z' + std::to_string(p);
    }
    return out;
}

// "z4 + z3 z1", "2 z2 z2 + z4", "z3 - 1/2 z2 z1"; zero is "0". Coefficients are
// printed only when different from 1.
inline std::string to_text(const HarmElem& e)
{
    if (e.is_zero()) {
        return "0";
    }
    std::string out;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        const auto& [w, c] = *it;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = c.abs();
        if (w.empty()) {
            out += mag.str();
        } else {
            if (!(mag == Rational(1))) {
                out += mag.str() + ' ';
            }
            out += to_text(w);
        }
    }
    return out;
}

inline std::string to_text(const PiMultiple& p) { return p.str(); }

inline std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string to_text(const NumericValue& v)
{
    return format_double(v.value) + " +/- " + format_double(v.error_bound);
}

using nlohmann::json;

inline void to_json(json& j, const Rational& r) { j = r.str(); }
inline void from_json(const json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

inline void to_json(json& j, const Word& w) { j = w.parts(); }
inline void from_json(const json& j, Word& w) { w = Word(j.get<std::vector<int>>()); }

// Array of {"word": [...], "coeff": "p/q"} in canonical (descending) word order.
inline void to_json(json& j, const HarmElem& e)
{
    j = json::array();
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        j.push_back({{"word", it->first}, {"coeff", it->second}});
    }
}

inline void from_json(const json& j, HarmElem& e)
{
    e = HarmElem();
    for (const auto& term : j) {
        e.add(term.at("word").get<Word>(), term.at("coeff").get<Rational>());
    }
}

inline void to_json(json& j, const PiMultiple& p) { j = {{"coeff", p.coeff}, {"pi_power", p.pi_power}}; }
inline void from_json(const json& j, PiMultiple& p)
{
    p.coeff = j.at("coeff").get<Rational>();
    p.pi_power = j.at("pi_power").get<unsigned>();
}

inline void to_json(json& j, const NumericValue& v)
{
    j = {{"value", format_double(v.value)}, {"error_bound", format_double(v.error_bound)}};
}
inline void from_json(const json& j, NumericValue& v)
{
    v.value = std::stod(j.at("value").get<std::string>());
    v.error_bound = std::stod(j.at("error_bound").get<std::string>());
}

} // namespace mzsv

template <>
struct nlohmann::adl_serializer<mzsv::Index> {
    static mzsv::Index from_json(const json& j) { return mzsv::Index(j.get<mzsv::Word>()); }
    static void to_json(json& j, const mzsv::Index& i) { j = i.word(); }
};
