#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace mzsv {

// Dense univariate polynomial, coefficients lowest degree first, trailing zeros
// trimmed. The zero polynomial has no coefficients.
template <typename R>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    [[nodiscard]] const std::vector<R>& coeffs() const { return c_; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] R operator[](std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, R(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                out[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Polynomial(std::move(out));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Division by a monic divisor; exact over any coefficient ring.
    struct DivMod;
    [[nodiscard]] DivMod divmod_monic(const Polynomial& d) const;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == R(0)) {
            c_.pop_back();
        }
    }

    std::vector<R> c_;
};

template <typename R>
struct Polynomial<R>::DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

template <typename R>
typename Polynomial<R>::DivMod Polynomial<R>::divmod_monic(const Polynomial& d) const
{
    if (d.is_zero() || !(d.c_.back() == R(1))) {
        throw std::invalid_argument("divmod_monic: divisor must be monic");
    }
    std::vector<R> rem = c_;
    const std::size_t dd = d.c_.size() - 1;
    if (rem.size() <= dd) {
        return {Polynomial(), Polynomial(std::move(rem))};
    }
    std::vector<R> quo(rem.size() - dd, R(0));
    for (std::size_t k = rem.size(); k-- > dd;) {
        const R lead = rem[k];
        if (lead == R(0)) {
            continue;
        }
        quo[k - dd] = lead;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[k - dd + j] -= lead * d.c_[j];
        }
    }
    rem.resize(dd);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

namespace detail {

inline IntPolynomial compute_cyclotomic(unsigned m);

struct CyclotomicCache {
    std::recursive_mutex mutex;
    std::map<unsigned, IntPolynomial> table;
};

inline CyclotomicCache& cyclotomic_cache()
{
    static CyclotomicCache cache;
    return cache;
}

} // namespace detail

// Phi_m(t): t^m - 1 divided exactly by the product of Phi_d over proper divisors d.
inline IntPolynomial cyclotomic_polynomial(unsigned m)
{
    if (m == 0) {
        throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
    }
    auto& cache = detail::cyclotomic_cache();
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.table.find(m); it != cache.table.end()) {
        return it->second;
    }
    std::vector<BigInt> tm1(m + 1, BigInt(0));
    tm1[0] = -1;
    tm1[m] = 1;
    IntPolynomial p(std::move(tm1));
    for (unsigned d = 1; d < m; ++d) {
        if (m % d == 0) {
            auto [q, r] = p.divmod_monic(cyclotomic_polynomial(d));
            if (!r.is_zero()) {
                throw std::logic_error("cyclotomic_polynomial: inexact division");
            }
            p = std::move(q);
        }
    }
    cache.table.emplace(m, p);
    return p;
}

// Thrown when a cyclotomic element does not reduce to a rational number.
class NotRational : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Element of Q[t]/(t^m - 1). The value it denotes is obtained by substituting a
// primitive m-th root of unity, i.e. by reducing modulo Phi_m.
class CycloElem {
public:
    explicit CycloElem(unsigned m) : m_(m), c_(check_modulus(m), Rational(0)) {}

    CycloElem(unsigned m, std::vector<Rational> coeffs) : m_(check_modulus(m)), c_(std::move(coeffs))
    {
        if (c_.size() != m_) {
            throw std::invalid_argument("CycloElem: expected " + std::to_string(m_) + " coefficients");
        }
    }

    static CycloElem monomial(unsigned m, const Rational& coeff, unsigned long exponent)
    {
        CycloElem e(m);
        e.c_[exponent % m] = coeff;
        return e;
    }

    [[nodiscard]] unsigned modulus() const { return m_; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }

    // Adds coeff * t^exponent in place.
    void add_term(const Rational& coeff, unsigned long exponent) { c_[exponent % m_] += coeff; }

    CycloElem& operator+=(const CycloElem& o)
    {
        same_ring(o);
        for (unsigned j = 0; j < m_; ++j) {
            c_[j] += o.c_[j];
        }
        return *this;
    }
    CycloElem& operator-=(const CycloElem& o)
    {
        same_ring(o);
        for (unsigned j = 0; j < m_; ++j) {
            c_[j] -= o.c_[j];
        }
        return *this;
    }
    friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
    friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }

    friend CycloElem operator*(const CycloElem& a, const CycloElem& b)
    {
        a.same_ring(b);
        CycloElem out(a.m_);
        for (unsigned i = 0; i < a.m_; ++i) {
            if (a.c_[i].is_zero()) {
                continue;
            }
            for (unsigned j = 0; j < a.m_; ++j) {
                if (!b.c_[j].is_zero()) {
                    out.c_[(i + j) % a.m_] += a.c_[i] * b.c_[j];
                }
            }
        }
        return out;
    }
    CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

    friend CycloElem operator*(const Rational& s, CycloElem a)
    {
        for (auto& c : a.c_) {
            c *= s;
        }
        return a;
    }

    // Equality in the group ring, not as complex numbers; see cyclo_reduce.
    friend bool operator==(const CycloElem&, const CycloElem&) = default;

private:
    static unsigned check_modulus(unsigned m)
    {
        if (m == 0) {
            throw std::invalid_argument("CycloElem: modulus must be positive");
        }
        return m;
    }

    void same_ring(const CycloElem& o) const
    {
        if (o.m_ != m_) {
            throw std::invalid_argument("CycloElem: mismatched moduli");
        }
    }

    unsigned m_;
    std::vector<Rational> c_;
};

// Canonical representative of e modulo Phi_m, of degree < phi(m).
inline RatPolynomial cyclo_reduce(const CycloElem& e)
{
    const auto phi = cyclotomic_polynomial(e.modulus());
    std::vector<Rational> phi_q;
    phi_q.reserve(phi.coeffs().size());
    for (const auto& c : phi.coeffs()) {
        phi_q.emplace_back(c);
    }
    return RatPolynomial(e.coeffs()).divmod_monic(RatPolynomial(std::move(phi_q))).remainder;
}

inline Rational cyclo_rational_value(const CycloElem& e)
{
    const auto r = cyclo_reduce(e);
    if (r.degree() > 0) {
        throw NotRational("cyclotomic element of modulus " + std::to_string(e.modulus()) +
                          " reduces to a polynomial of degree " + std::to_string(r.degree()));
    }
    return r[0];
}

} // namespace mzsv
