#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cyclotomic.hpp"
#include "rational.hpp"

namespace mzsv {

namespace detail {

inline void check_same_ring(const Rational&, const Rational&) {}

inline void check_same_ring(const CycloElem& a, const CycloElem& b)
{
    if (a.modulus() != b.modulus()) {
        throw std::invalid_argument("PowerSeries: mismatched cyclotomic moduli");
    }
}

} // namespace detail

// Dense power series sum_{d < T} c_d x^d with hard truncation order T, over a
// coefficient ring R (Rational or CycloElem). Nothing at degree >= T is ever
// read or written.
template <typename R>
class PowerSeries {
public:
    explicit PowerSeries(std::vector<R> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty()) {
            throw std::invalid_argument("PowerSeries: truncation order must be positive");
        }
    }

    // Series of order `order` with every coefficient equal to `zero`, which also
    // fixes the ring (relevant for CycloElem).
    PowerSeries(std::size_t order, const R& zero) : PowerSeries(std::vector<R>(order, zero)) {}

    [[nodiscard]] std::size_t order() const { return c_.size(); }
    [[nodiscard]] const R& operator[](std::size_t d) const { return c_.at(d); }
    [[nodiscard]] R& operator[](std::size_t d) { return c_.at(d); }
    [[nodiscard]] const std::vector<R>& coeffs() const { return c_; }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<R> c_;
};

// Cauchy product truncated at the common order.
template <typename R>
PowerSeries<R> series_mul(const PowerSeries<R>& a, const PowerSeries<R>& b)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument("series_mul: mismatched truncation orders");
    }
    detail::check_same_ring(a[0], b[0]);
    std::vector<R> out;
    out.reserve(a.order());
    for (std::size_t d = 0; d < a.order(); ++d) {
        R acc = a[0] * b[d];
        for (std::size_t i = 1; i <= d; ++i) {
            acc += a[i] * b[d - i];
        }
        out.push_back(std::move(acc));
    }
    return PowerSeries<R>(std::move(out));
}

} // namespace mzsv
