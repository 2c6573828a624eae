#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials, coefficients stored low-to-high.
 *
 * The coefficient type only needs ring operations and an is_zero() overload
 * found by ADL (or the Rational overload in integer.hpp). Zero and one are
 * derived from existing coefficients, so runtime-parametrized fields such as
 * F_q elements work without a global context.
 */

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "artin/arith/integer.hpp"

namespace artin::arith {

template <class T>
T zero_like(const T& x) {
    return x - x;
}

template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    /// Polynomial c*x^k.
    static Poly monomial(const T& c, std::size_t k) {
        std::vector<T> v(k + 1, zero_like(c));
        v[k] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](std::size_t i) const { return c_.at(i); }
    const T& leading() const { return c_.back(); }

    /// Coefficient of x^i, or `zero` when i exceeds the degree.
    T coeff(std::size_t i, const T& zero) const { return i < c_.size() ? c_[i] : zero; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly operator-() const {
        std::vector<T> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(-x);
        return Poly(std::move(v));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.c_.size() < b.c_.size()) return b + a;
        std::vector<T> v = a.c_;
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.c_.empty() || b.c_.empty()) return Poly();
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& a, const T& s) {
        std::vector<T> v;
        v.reserve(a.c_.size());
        for (const auto& x : a.c_) v.push_back(x * s);
        return Poly(std::move(v));
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> v;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            T acc = zero_like(c_[i]);
            for (std::size_t k = 0; k < i; ++k) acc = acc + c_[i];
            v.push_back(acc);
        }
        return Poly(std::move(v));
    }

    T evaluate(const T& x) const {
        if (c_.empty()) return zero_like(x);
        T r = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) r = r * x + c_[i];
        return r;
    }

    /// Division with remainder over a field. Requires a nonzero divisor.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.c_.empty()) throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly(), a};
        const T zero = zero_like(b.leading());
        const T lead_inv = inverse_of(b.leading());
        std::vector<T> rem = a.c_;
        std::vector<T> quo(a.c_.size() - b.c_.size() + 1, zero);
        for (std::size_t i = quo.size(); i-- > 0;) {
            const T coef = rem[i + b.c_.size() - 1] * lead_inv;
            quo[i] = coef;
            if (is_zero(coef)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[i + j] = rem[i + j] - coef * b.c_[j];
        }
        rem.resize(b.c_.size() - 1, zero);
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

    Poly monic() const {
        if (c_.empty()) return *this;
        return *this * inverse_of(leading());
    }

private:
    static T inverse_of(const T& x) { return (x / x) / x; }

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

/// Monic gcd over a field.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
    while (!b.is_zero_poly()) {
        Poly<T> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, u) with g = gcd(a, m) monic and u*a = g (mod m).
template <class T>
std::pair<Poly<T>, Poly<T>> gcd_with_cofactor(const Poly<T>& a, const Poly<T>& m, const T& one) {
    Poly<T> r0 = m, r1 = a;
    Poly<T> s0, s1({one});
    while (!r1.is_zero_poly()) {
        auto [q, r] = divmod(r0, r1);
        Poly<T> s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero_poly()) return {r0, s0};
    const T lead = r0.leading();
    const T inv = one / lead;
    return {r0 * inv, s0 * inv};
}

/// Square-and-multiply power of `base` modulo `mod`.
template <class T>
Poly<T> powmod(Poly<T> base, Int e, const Poly<T>& mod, const T& one) {
    Poly<T> r({one});
    base = base % mod;
    while (e > 0) {
        if ((e & 1) != 0) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

}  // namespace artin::arith
