#pragma once

/**
 * @file density.hpp
 * @brief Bounded lattice sets Y(c), exceptional primes X(c) and truncated
 *        upper-density estimates.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "artin/arith/analytic.hpp"
#include "artin/arith/number_field.hpp"
#include "artin/satake/satake.hpp"

namespace artin::density {

using arith::AlgebraicNumber;
using arith::BoundCompare;
using arith::CertifiedInterval;
using arith::FieldRef;
using arith::Int;
using arith::Rational;

/// r · Σ_{m=1}^n C(n,m)² / η
inline Rational threshold_c(const Rational& eta, unsigned n, unsigned r) {
    if (eta <= 0) throw invalid_input("eta must be positive");
    if (n == 0 || r == 0) throw invalid_input("n and r must be positive");
    Int s = 0;
    for (unsigned m = 1; m <= n; ++m) {
        const Int b = arith::binomial(n, m);
        s += b * b;
    }
    return Rational(r) * Rational(s) / eta;
}

struct BoundedIntegerSet {
    FieldRef field;
    Rational c;
    std::vector<AlgebraicNumber> elements;  // sorted by coordinates
    std::vector<bool> boundary_uncertain;
    std::size_t box_points = 0;

    std::size_t size() const { return elements.size(); }
    bool contains(const AlgebraicNumber& a) const {
        return std::binary_search(elements.begin(), elements.end(), a);
    }
    std::size_t uncertain_count() const {
        return static_cast<std::size_t>(std::count(boundary_uncertain.begin(), boundary_uncertain.end(), true));
    }
};

namespace detail {

/// Inverse of the Vandermonde matrix V_{ik} = θ_i^k, in long double.
inline std::vector<std::vector<std::complex<long double>>> vandermonde_inverse(const std::vector<arith::cld>& roots) {
    using C = std::complex<long double>;
    const std::size_t r = roots.size();
    std::vector<std::vector<C>> a(r, std::vector<C>(2 * r));
    for (std::size_t i = 0; i < r; ++i) {
        C pw = 1;
        for (std::size_t k = 0; k < r; ++k) {
            a[i][k] = pw;
            pw *= roots[i];
        }
        a[i][r + i] = 1;
    }
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < r; ++i)
            if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
        std::swap(a[col], a[piv]);
        const C d = a[col][col];
        for (auto& x : a[col]) x /= d;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == col) continue;
            const C f = a[i][col];
            if (f == C(0)) continue;
            for (std::size_t k = 0; k < 2 * r; ++k) a[i][k] -= f * a[col][k];
        }
    }
    std::vector<std::vector<C>> inv(r, std::vector<C>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) inv[i][k] = a[i][r + k];
    return inv;  // x = inv · σ(a)
}

}  // namespace detail

/// Algebraic integers of Z[θ] with every |σ(a)|² <= c.
inline BoundedIntegerSet enumerate_Y(const FieldRef& K, const Rational& c, std::size_t cap = 5'000'000) {
    if (c < 0) throw invalid_input("c must be non-negative");
    BoundedIntegerSet Y{K, c, {}, {}, 0};
    const std::size_t r = K->degree();
    const auto& roots = K->approx_roots();
    const auto inv = detail::vandermonde_inverse(roots);
    const long double sq = std::sqrt(arith::to_long_double(c));
    // |x_k| <= Σ_i |inv_{ki}| · sqrt(c), padded against rounding
    std::vector<long long> box(r);
    long double volume = 1;
    for (std::size_t k = 0; k < r; ++k) {
        long double s = 0;
        for (std::size_t i = 0; i < r; ++i) s += std::abs(inv[k][i]);
        box[k] = static_cast<long long>(std::floor(s * sq * (1 + 1e-9L) + 1e-9L));
        volume *= static_cast<long double>(2 * box[k] + 1);
    }
    if (volume > static_cast<long double>(cap))
        throw enumeration_overflow("coordinate box for Y(" + arith::to_string(c) + ") has " +
                                   std::to_string(static_cast<unsigned long long>(volume)) + " points");
    const long double cl = arith::to_long_double(c);
    std::vector<long long> x(r);
    for (std::size_t k = 0; k < r; ++k) x[k] = -box[k];
    while (true) {
        ++Y.box_points;
        bool reject = false;
        for (std::size_t i = 0; i < r && !reject; ++i) {
            std::complex<long double> v = 0, pw = 1;
            for (std::size_t k = 0; k < r; ++k) {
                v += static_cast<long double>(x[k]) * pw;
                pw *= roots[i];
            }
            if (std::norm(v) > cl * (1 + 1e-6L) + 1e-6L) reject = true;
        }
        if (!reject) {
            std::vector<Rational> coords;
            for (auto v : x) coords.emplace_back(v);
            AlgebraicNumber a(K, coords);
            const auto cmp = arith::compare_all_abs_sq(a, c);
            if (cmp != BoundCompare::exceeds) {
                Y.elements.push_back(a);
                Y.boundary_uncertain.push_back(cmp == BoundCompare::uncertain);
            }
        }
        std::size_t k = 0;
        for (; k < r && x[k] == box[k]; ++k) x[k] = -box[k];
        if (k == r) break;
        ++x[k];
    }
    // sort while keeping flags aligned
    std::vector<std::size_t> order(Y.elements.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return Y.elements[a] < Y.elements[b]; });
    BoundedIntegerSet out{K, c, {}, {}, Y.box_points};
    for (auto i : order) {
        out.elements.push_back(Y.elements[i]);
        out.boundary_uncertain.push_back(Y.boundary_uncertain[i]);
    }
    return out;
}

struct ExceptionalSet {
    Rational c;
    Int scale;
    std::vector<std::uint64_t> primes;            // X(c), ascending
    std::vector<std::uint64_t> uncertain_primes;  // classified into X(c) by a boundary straddle
    std::size_t classified = 0;
    std::set<std::vector<AlgebraicNumber>> tuples;  // (a_1(p),…,a_n(p)) for p outside X(c)
    std::size_t Y_size = 0;                         // |Y(N² c)|
    Int tuple_bound;                                // |Y(N² c)|^n
    bool finite_bound_holds = false;
};

/// Splits the stored primes of S by |σ(a_m(p))|² <= c; primes outside X(c) must land in Y(N² c) after scaling.
inline ExceptionalSet classify_X(const satake::SatakeSystem& S, const Rational& c, const Int& N) {
    if (c < 0) throw invalid_input("c must be non-negative");
    if (N <= 0) throw invalid_input("scale must be positive");
    ExceptionalSet X;
    X.c = c;
    X.scale = N;
    const auto Y = enumerate_Y(S.field(), Rational(N * N) * c);
    X.Y_size = Y.size();
    for (const auto& [p, a] : S.coefficients()) {
        if (!satake::check_integrality(S, p))
            throw precondition_violation("a_m(" + std::to_string(p) + ") is not integral away from N");
        ++X.classified;
        bool exceptional = false, uncertain = false;
        for (const auto& am : a) {
            const auto cmp = arith::compare_all_abs_sq(am, c);
            if (cmp == BoundCompare::exceeds) {
                exceptional = true;
                break;
            }
            if (cmp == BoundCompare::uncertain) uncertain = true;
        }
        if (exceptional || uncertain) {
            X.primes.push_back(p);
            if (!exceptional) X.uncertain_primes.push_back(p);
            continue;
        }
        for (const auto& am : a) {
            const AlgebraicNumber scaled = am * AlgebraicNumber::from_rational(S.field(), Rational(N));
            if (!scaled.has_integral_coords())
                throw verification_failure("N·a_m(" + std::to_string(p) + ") = " + scaled.to_string() +
                                           " is not in Z[θ]");
            if (!Y.contains(scaled))
                throw verification_failure("N·a_m(" + std::to_string(p) + ") = " + scaled.to_string() +
                                           " is missing from Y(N²c)");
        }
        X.tuples.insert(a);
    }
    X.tuple_bound = arith::ipow(Int(X.Y_size), S.n());
    X.finite_bound_holds = Int(X.tuples.size()) <= X.tuple_bound;
    return X;
}

struct DensupRow {
    Rational s;
    CertifiedInterval numerator;  // Σ_{p∈X, p<=P} p^{-s}
    CertifiedInterval log_term;   // log(1/(s-1))
    CertifiedInterval ratio;
    long double estimate = 0;     // midpoint of ratio
};

struct DensupTable {
    std::uint64_t cutoff = 0;
    std::size_t primes_used = 0;
    std::vector<DensupRow> rows;  // ordered by decreasing s
    bool monotone = true;         // numerators increase as s decreases
};

/// Truncated estimates of Σ_{p∈X, p<=P} p^{-s} / log(1/(s-1)) on a grid of s values.
inline DensupTable densup_estimate(const std::vector<std::uint64_t>& X, std::vector<Rational> s_grid, std::uint64_t P) {
    for (const auto& s : s_grid)
        if (s <= 1 || s > 2) throw invalid_input("grid values must lie in (1, 2]");
    std::sort(s_grid.begin(), s_grid.end(), [](const Rational& a, const Rational& b) { return a > b; });
    s_grid.erase(std::unique(s_grid.begin(), s_grid.end()), s_grid.end());
    std::vector<std::uint64_t> primes(X);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    primes.erase(std::upper_bound(primes.begin(), primes.end(), P), primes.end());
    DensupTable t;
    t.cutoff = P;
    t.primes_used = primes.size();
    for (const auto& s : s_grid) {
        DensupRow row;
        row.s = s;
        row.numerator = {Rational(0), Rational(0)};
        for (auto p : primes) {
            const auto w = arith::neg_power_enclosure(p, s);
            row.numerator.lo += w.lo;
            row.numerator.hi += w.hi;
        }
        row.log_term = arith::log_enclosure(Rational(1) / (s - 1));
        if (row.log_term.lo <= 0) throw invalid_input("log(1/(s-1)) must be positive; choose s < 2");
        row.ratio = {row.numerator.lo / row.log_term.hi, row.numerator.hi / row.log_term.lo};
        row.estimate = arith::to_long_double((row.ratio.lo + row.ratio.hi) / 2);
        if (!t.rows.empty() && row.numerator.hi < t.rows.back().numerator.lo) t.monotone = false;
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace artin::density
