#pragma once

/**
 * @file cyclo.hpp
 * @brief Characteristic polynomials whose roots are roots of unity of bounded
 *        order, and their reductions at degree-one places of Q(ζ_L).
 *
 * A root ζ_M^e is stored by its exponent e modulo M = lcm{d : d < A}.
 * Coefficients live in Z[ζ_M] on the power basis (length φ(M)).
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "artin/arith/integer.hpp"
#include "artin/arith/number_field.hpp"
#include "artin/errors.hpp"

namespace artin::recover {

using arith::Int;
using Coords = std::vector<Int>;

inline const std::vector<Int>& cyclotomic_poly_cached(unsigned m) {
    static std::map<unsigned, std::vector<Int>> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, arith::cyclotomic_poly(m)).first;
    return it->second;
}

/// Reduces a group-ring element Σ c_k x^k (k < L) modulo Φ_L; result has length φ(L).
inline Coords reduce_mod_cyclotomic(std::vector<Int> g, unsigned L) {
    const auto& phi = cyclotomic_poly_cached(L);
    const std::size_t d = phi.size() - 1;
    for (std::size_t k = g.size(); k-- > d;) {
        if (g[k] == 0) continue;
        const Int c = g[k];
        for (std::size_t i = 0; i <= d; ++i) g[k - d + i] -= c * phi[i];
    }
    g.resize(d, Int(0));
    return g;
}

/// Coordinates in Q(ζ_a) re-expressed in Q(ζ_L), a | L.
inline Coords embed_coords(const Coords& x, unsigned a, unsigned L) {
    if (L % a != 0) throw invalid_input("cyclotomic index does not divide the target");
    std::vector<Int> g(L, Int(0));
    for (std::size_t k = 0; k < x.size(); ++k) g[(k * (L / a)) % L] += x[k];
    return reduce_mod_cyclotomic(std::move(g), L);
}

inline std::uint64_t lcm_below(unsigned A) {
    std::uint64_t M = 1;
    for (unsigned d = 1; d < A; ++d) M = std::lcm(M, static_cast<std::uint64_t>(d));
    return M;
}

struct CycloCharPoly {
    std::vector<unsigned> orders;     // root orders, ascending
    std::vector<unsigned> exponents;  // ζ_M^e, aligned with the root list order
    unsigned M = 1;
    std::vector<Coords> coeffs;       // c_0..c_n of ∏(1 - ζ T) in Z[ζ_M]
    std::optional<std::vector<Int>> integer_coeffs;

    unsigned degree() const { return static_cast<unsigned>(orders.size()); }

    std::string describe() const {
        std::string s;
        if (integer_coeffs) {
            for (std::size_t k = 0; k < integer_coeffs->size(); ++k) {
                const Int& c = (*integer_coeffs)[k];
                if (c == 0) continue;
                if (!s.empty()) s += c < 0 ? " - " : " + ";
                else if (c < 0) s += "-";
                const Int a = c < 0 ? Int(-c) : c;
                if (k == 0 || a != 1) s += a.str();
                if (k >= 1) s += "T";
                if (k >= 2) s += "^" + std::to_string(k);
            }
            return s;
        }
        s = "prod(1 - z T) over z in {";
        for (std::size_t i = 0; i < exponents.size(); ++i)
            s += (i ? ", " : "") + std::string("zeta") + std::to_string(M) + "^" + std::to_string(exponents[i]);
        return s + "}";
    }
};

/// Product of (1 - ζ_M^e T) over the exponents.
inline CycloCharPoly make_cyclo_poly(std::vector<unsigned> exponents, unsigned M) {
    CycloCharPoly R;
    R.M = M;
    std::sort(exponents.begin(), exponents.end());
    R.exponents = exponents;
    for (auto e : exponents) R.orders.push_back(static_cast<unsigned>(M / std::gcd(e % M, M)));
    std::sort(R.orders.begin(), R.orders.end());
    // group-ring coefficients, one vector of length M per power of T
    std::vector<std::vector<Int>> poly{std::vector<Int>(M, Int(0))};
    poly[0][0] = 1;
    for (auto e : exponents) {
        poly.emplace_back(M, Int(0));
        for (std::size_t k = poly.size() - 1; k >= 1; --k)
            for (unsigned j = 0; j < M; ++j)
                if (poly[k - 1][j] != 0) poly[k][(j + e) % M] -= poly[k - 1][j];
    }
    bool rational = true;
    for (auto& c : poly) {
        R.coeffs.push_back(reduce_mod_cyclotomic(std::move(c), M));
        for (std::size_t i = 1; i < R.coeffs.back().size(); ++i)
            if (R.coeffs.back()[i] != 0) rational = false;
    }
    if (rational) {
        std::vector<Int> ic;
        for (const auto& c : R.coeffs) ic.push_back(c[0]);
        R.integer_coeffs = ic;
    }
    return R;
}

struct YSet {
    unsigned A = 0, n = 0, M = 1;
    std::vector<unsigned> root_exponents;  // available roots, by (order, exponent)
    std::vector<CycloCharPoly> polys;

    std::size_t size() const { return polys.size(); }
    /// Index of the member with the given coefficients, or npos.
    std::size_t find(const std::vector<Coords>& coeffs) const {
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (polys[i].coeffs == coeffs) return i;
        return npos;
    }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// All ∏(1 - ζ_i T) with n roots of unity of order < A, as multisets in lexicographic order.
inline YSet enumerate_Y(unsigned A, unsigned n, std::size_t cap = 200000) {
    if (A < 2) throw invalid_input("A must be at least 2");
    if (n == 0) throw invalid_input("n must be positive");
    YSet Y;
    Y.A = A;
    Y.n = n;
    const std::uint64_t M64 = lcm_below(A);
    if (M64 > 5040) throw enumeration_overflow("lcm of orders below " + std::to_string(A) + " is too large");
    Y.M = static_cast<unsigned>(M64);
    for (unsigned d = 1; d < A; ++d)
        for (unsigned k = 1; k <= d; ++k)
            if (std::gcd(k, d) == 1) Y.root_exponents.push_back((Y.M / d * k) % Y.M);
    const std::size_t R = Y.root_exponents.size();
    const Int count = arith::binomial(static_cast<long>(R + n - 1), static_cast<long>(n));
    if (count > Int(cap))
        throw enumeration_overflow("|Y| = " + count.str() + " exceeds the cap " + std::to_string(cap));
    std::vector<std::size_t> idx(n, 0);
    std::map<std::vector<Coords>, std::size_t> seen;
    while (true) {
        std::vector<unsigned> ex;
        for (auto i : idx) ex.push_back(Y.root_exponents[i]);
        auto P = make_cyclo_poly(ex, Y.M);
        if (seen.emplace(P.coeffs, Y.polys.size()).second) Y.polys.push_back(std::move(P));
        // next non-decreasing index tuple
        std::size_t k = n;
        while (k > 0 && idx[k - 1] == R - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t j = k; j < n; ++j) idx[j] = idx[k - 1];
    }
    return Y;
}

/// Degree-one place of Q(ζ_L) over ℓ: ζ_L ↦ g, a primitive L-th root of unity mod ℓ.
struct CycloPlace {
    std::uint64_t ell = 0;
    unsigned L = 1;
    std::uint64_t g = 1;
    std::uint64_t image(unsigned a) const {  // image of ζ_a for a | L
        return arith::powmod(g, L / a, ell);
    }
};

/// Primitive L-th roots of unity mod ℓ in increasing exponent order j, gcd(j, L) = 1.
inline std::vector<std::uint64_t> primitive_roots_of_unity(std::uint64_t ell, unsigned L) {
    if ((ell - 1) % L != 0) return {};
    const std::uint64_t h = arith::powmod(arith::primitive_root(ell), (ell - 1) / L, ell);
    std::vector<std::uint64_t> out;
    for (unsigned j = 1; j <= L; ++j)
        if (std::gcd(j, L) == 1) out.push_back(arith::powmod(h, j, ell));
    return out;
}

inline std::uint64_t reduce_coords(const Coords& c, unsigned a, const CycloPlace& pl) {
    const std::uint64_t z = pl.image(a);
    std::uint64_t acc = 0, pw = 1;
    for (const auto& x : c) {
        Int r = x % Int(pl.ell);
        if (r < 0) r += pl.ell;
        acc = (acc + arith::mulmod(static_cast<std::uint64_t>(r), pw, pl.ell)) % pl.ell;
        pw = arith::mulmod(pw, z, pl.ell);
    }
    return acc;
}

inline std::vector<std::uint64_t> reduce_poly(const CycloCharPoly& R, const CycloPlace& pl) {
    std::vector<std::uint64_t> out;
    for (const auto& c : R.coeffs) out.push_back(reduce_coords(c, R.M, pl));
    return out;
}

/// True iff distinct members of Y stay distinct at the place.
inline bool reduction_injective(const YSet& Y, const CycloPlace& pl) {
    std::map<std::vector<std::uint64_t>, std::size_t> seen;
    for (std::size_t i = 0; i < Y.size(); ++i)
        if (!seen.emplace(reduce_poly(Y.polys[i], pl), i).second) return false;
    return true;
}

}  // namespace artin::recover
