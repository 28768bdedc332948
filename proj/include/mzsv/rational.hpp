#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace mzsv {

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
// Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(const BigInt& v) : q_(v) {}

    Rational(const BigInt& num, const BigInt& den)
    {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    static Rational from_mpq(mpq_class q)
    {
        q.canonicalize();
        Rational r;
        r.q_ = std::move(q);
        return r;
    }

    // Accepts "p/q" or "p" with an optional leading sign.
    static Rational parse(std::string_view s)
    {
        std::string text(s);
        if (text.empty()) {
            throw std::invalid_argument("Rational: empty string");
        }
        const auto slash = text.find('/');
        const auto is_int = [](const std::string& t) {
            std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i == t.size()) {
                return false;
            }
            for (; i < t.size(); ++i) {
                if (t[i] < '0' || t[i] > '9') {
                    return false;
                }
            }
            return true;
        };
        const auto to_big = [](std::string t) {
            if (!t.empty() && t[0] == '+') {
                t.erase(0, 1);
            }
            return BigInt(t, 10);
        };
        if (slash == std::string::npos) {
            if (!is_int(text)) {
                throw std::invalid_argument("Rational: malformed '" + text + "'");
            }
            return Rational(to_big(text));
        }
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
            throw std::invalid_argument("Rational: malformed '" + text + "'");
        }
        return Rational(to_big(num), to_big(den));
    }

    [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

    [[nodiscard]] Rational abs() const { return from_mpq(::abs(q_)); }

    [[nodiscard]] Rational inverse() const
    {
        if (is_zero()) {
            throw std::domain_error("Rational: inverse of zero");
        }
        return from_mpq(1 / q_);
    }

    [[nodiscard]] Rational pow(unsigned e) const
    {
        Rational base = *this;
        Rational acc(1);
        while (e != 0) {
            if (e & 1U) {
                acc *= base;
            }
            e >>= 1U;
            if (e != 0) {
                base *= base;
            }
        }
        return acc;
    }

    [[nodiscard]] double to_double() const { return q_.get_d(); }

    // "p/q" in lowest terms, or "p" when q = 1.
    [[nodiscard]] std::string str() const
    {
        if (is_integer()) {
            return q_.get_num().get_str();
        }
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return from_mpq(-a.q_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline BigInt factorial(unsigned n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned n, unsigned k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow2(unsigned e)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

// Exact value q * pi^w.
struct PiMultiple {
    Rational coeff;
    unsigned pi_power = 0;

    friend bool operator==(const PiMultiple&, const PiMultiple&) = default;

    PiMultiple& operator*=(const PiMultiple& o)
    {
        coeff *= o.coeff;
        pi_power += o.pi_power;
        return *this;
    }
    friend PiMultiple operator*(PiMultiple a, const PiMultiple& b) { return a *= b; }

    // "p/q * pi^w"
    [[nodiscard]] std::string str() const
    {
        return coeff.str() + " * pi^" + std::to_string(pi_power);
    }
};

} // namespace mzsv
