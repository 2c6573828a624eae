#pragma once

/**
 * @file analytic.hpp
 * @brief Rational enclosures of p^(-s) and log x built from long double values.
 *
 * The long double result is widened by a relative 2^-40 before conversion,
 * far above the few-ulp error of the libm routines involved.
 */

#include <cmath>
#include <cstdint>

#include "artin/arith/integer.hpp"
#include "artin/arith/number_field.hpp"

namespace artin::arith {

inline CertifiedInterval widen(long double v) {
    const long double eps = std::ldexp(1.0L, -40);
    const long double a = std::abs(v) * eps;
    return {exact_rational(v - a), exact_rational(v + a)};
}

/// Enclosure of p^(-s) for p >= 2 and rational s > 0.
inline CertifiedInterval neg_power_enclosure(std::uint64_t p, const Rational& s) {
    if (s == 1) return {Rational(1, p), Rational(1, p)};
    if (denom(s) == 1 && s > 0 && s < 64) {
        const Rational v = Rational(1) / Rational(ipow(Int(p), static_cast<unsigned>(numer(s))));
        return {v, v};
    }
    const long double sv = to_long_double(s);
    auto iv = widen(std::exp(-sv * std::log(static_cast<long double>(p))));
    if (iv.lo < 0) iv.lo = 0;
    return iv;
}

/// Enclosure of log(x) for rational x > 0.
inline CertifiedInterval log_enclosure(const Rational& x) {
    if (x <= 0) throw invalid_input("log of a non-positive number");
    if (x == 1) return {Rational(0), Rational(0)};
    return widen(std::log(to_long_double(x)));
}

}  // namespace artin::arith
