#pragma once

/**
 * @file synthetic.hpp
 * @brief Artin-type test data from explicit finite Galois groups.
 *
 * C4: the cyclotomic field Q(ζ_5), Frob_p ↦ p mod 5, ρ(σ_2) = i.
 * S3: splitting field of x^3 - x - 1, two-dimensional standard representation.
 * A4: splitting field of x^4 + 8x + 12, three-dimensional standard representation.
 * Frobenius cycle types come from distinct-degree factorization mod p.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "artin/arith/matrix.hpp"
#include "artin/arith/number_field.hpp"
#include "artin/arith/zmod.hpp"
#include "artin/matgroup/group.hpp"
#include "artin/recover/cyclo.hpp"
#include "artin/recover/recover.hpp"

namespace artin::recover {

struct SyntheticArtin {
    std::string name;
    FieldRef K;                // Hecke field, cyclotomic
    unsigned m = 1;            // K = Q(ζ_m)
    unsigned n = 0;
    unsigned A = 0;
    std::vector<std::uint64_t> excluded;
    std::map<std::uint64_t, std::vector<Coords>> truth;  // p ↦ coefficients of det(1 − ρ(Frob_p) T) in Z[ζ_m]
    std::vector<unsigned> conjugation_exponents;         // ρ(complex conjugation) eigenvalues as ζ_M exponents
};

/// Degrees of the irreducible factors of f mod p (f squarefree mod p), ascending.
inline std::vector<unsigned> factor_degrees(const std::vector<Int>& f, std::uint64_t p) {
    using arith::Zmod;
    using arith::ZmodPoly;
    const Zmod one = Zmod::of(1LL, p);
    ZmodPoly g = arith::to_zmod_poly(f, p);
    const ZmodPoly x = ZmodPoly::monomial(one, 1);
    if (arith::gcd(g, g.derivative()).degree() > 0)
        throw bad_reduction("polynomial is not squarefree modulo " + std::to_string(p));
    std::vector<unsigned> out;
    ZmodPoly h = x;
    for (unsigned d = 1; g.degree() > 0; ++d) {
        h = arith::powmod(h, Int(p), g, one);
        const ZmodPoly c = arith::gcd(g, h - x);
        const unsigned k = static_cast<unsigned>(c.degree()) / d;
        for (unsigned i = 0; i < k; ++i) out.push_back(d);
        if (c.degree() > 0) {
            g = g / c;
            h = h % g;
        }
        if (static_cast<unsigned>(g.degree()) < 2 * (d + 1) && g.degree() > 0) {
            out.push_back(static_cast<unsigned>(g.degree()));
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// det(1 − ρ(σ) T) for the permutation representation minus the trivial one, σ of the given cycle type.
inline std::vector<Int> standard_rep_charpoly(const std::vector<unsigned>& cycle_type) {
    const unsigned n = std::accumulate(cycle_type.begin(), cycle_type.end(), 0u);
    arith::Matrix<arith::Rational> P(n, n, arith::Rational(0));
    unsigned start = 0;
    for (auto len : cycle_type) {
        for (unsigned i = 0; i < len; ++i) P(start + (i + 1) % len, start + i) = 1;
        start += len;
    }
    const auto c = arith::reversed_charpoly(P, arith::Rational(1));
    // divide by (1 − T)
    std::vector<arith::Rational> q(c.size() - 1);
    arith::Rational carry = 0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        carry += c[k];
        q[k] = carry;
    }
    if (carry + c.back() != 0) throw verification_failure("trivial summand missing from the permutation representation");
    std::vector<Int> out;
    for (const auto& x : q) out.push_back(arith::numer(x));
    return out;
}

inline SyntheticArtin synthetic_c4(std::uint64_t bound) {
    SyntheticArtin s;
    s.name = "C4";
    s.K = arith::NumberField::cyclotomic(4);
    s.m = 4;
    s.n = 1;
    s.A = 5;
    s.excluded = {5};
    for (auto p : arith::primes_up_to(bound)) {
        if (p == 5) continue;
        unsigned t = 0;
        while (arith::powmod(2, t, 5) != p % 5) ++t;
        // 1 − i^t T
        const std::vector<Coords> units{{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(0)}, {Int(0), Int(-1)}};
        Coords c1 = units[t];
        for (auto& x : c1) x = -x;
        s.truth[p] = {{Int(1), Int(0)}, c1};
    }
    s.conjugation_exponents = {6};  // ρ(σ_{-1}) = i^2 = -1 = ζ_12^6
    return s;
}

inline SyntheticArtin synthetic_from_polynomial(std::string name, std::vector<Int> f, std::vector<std::uint64_t> excluded,
                                                unsigned A, std::vector<unsigned> conj_cycle_type, std::uint64_t bound) {
    SyntheticArtin s;
    s.name = std::move(name);
    s.K = arith::NumberField::rationals();
    s.m = 1;
    s.n = static_cast<unsigned>(f.size()) - 2;
    s.A = A;
    s.excluded = std::move(excluded);
    for (auto p : arith::primes_up_to(bound)) {
        if (std::find(s.excluded.begin(), s.excluded.end(), p) != s.excluded.end()) continue;
        const auto ct = factor_degrees(f, p);
        std::vector<Coords> coeffs;
        for (const auto& c : standard_rep_charpoly(ct)) coeffs.push_back({c});
        s.truth[p] = coeffs;
    }
    // eigenvalues of a permutation: for each cycle of length k, all k-th roots of unity; drop one eigenvalue 1
    const unsigned M = static_cast<unsigned>(lcm_below(A));
    for (auto len : conj_cycle_type)
        for (unsigned j = 0; j < len; ++j) s.conjugation_exponents.push_back(M / len * j);
    s.conjugation_exponents.erase(std::find(s.conjugation_exponents.begin(), s.conjugation_exponents.end(), 0u));
    return s;
}

inline SyntheticArtin synthetic_s3(std::uint64_t bound) {
    // one real root: complex conjugation is a transposition
    return synthetic_from_polynomial("S3", {Int(-1), Int(-1), Int(0), Int(1)}, {23}, 4, {1, 2}, bound);
}

inline SyntheticArtin synthetic_a4(std::uint64_t bound) {
    // no real roots: complex conjugation is a double transposition
    return synthetic_from_polynomial("A4", {Int(12), Int(8), Int(0), Int(0), Int(1)}, {2, 3}, 4, {2, 2}, bound);
}

/// The table at ℓ for the place θ ↦ root (the smallest root of the field polynomial when root == 0).
inline ModLFrobTable make_table(const SyntheticArtin& s, std::uint64_t ell, std::uint64_t root = 0) {
    ModLFrobTable t;
    t.ell = ell;
    t.field = s.K->defining_poly();
    t.excluded = s.excluded;
    if (root == 0) {
        const auto roots = arith::roots_mod(*s.K, ell);
        if (roots.empty()) throw invalid_place("field polynomial has no root mod " + std::to_string(ell));
        root = roots.front();
    }
    t.root = root;
    for (const auto& [p, coeffs] : s.truth) {
        if (p == ell) continue;
        std::vector<std::uint64_t> red;
        for (const auto& c : coeffs) {
            std::uint64_t acc = 0, pw = 1;
            for (const auto& x : c) {
                Int r = x % Int(ell);
                if (r < 0) r += ell;
                acc = (acc + arith::mulmod(static_cast<std::uint64_t>(r), pw, ell)) % ell;
                pw = arith::mulmod(pw, root % ell, ell);
            }
            red.push_back(acc);
        }
        t.entries[p] = red;
    }
    t.excluded.push_back(ell);
    std::sort(t.excluded.begin(), t.excluded.end());
    t.excluded.erase(std::unique(t.excluded.begin(), t.excluded.end()), t.excluded.end());
    return t;
}

/// Whether the matched member of Y equals the true polynomial, compared in Q(ζ_L).
inline bool matches_truth(const CycloCharPoly& R, const std::vector<Coords>& truth, unsigned m, unsigned L) {
    if (R.coeffs.size() != truth.size()) return false;
    for (std::size_t k = 0; k < truth.size(); ++k)
        if (embed_coords(R.coeffs[k], R.M, L) != embed_coords(truth[k], m, L)) return false;
    return true;
}

inline matgroup::FiniteMatrixGroup s3_in_gl2(std::uint32_t p) {
    auto F = arith::FiniteField::make(p);
    return matgroup::FiniteMatrixGroup::close(F, 2, {matgroup::from_rows(*F, 2, {0, -1, 1, -1}),
                                                     matgroup::from_rows(*F, 2, {0, 1, 1, 0})});
}

inline matgroup::FiniteMatrixGroup c4_in_gl2(std::uint32_t p) {
    auto F = arith::FiniteField::make(p);
    return matgroup::FiniteMatrixGroup::close(F, 2, {matgroup::from_rows(*F, 2, {0, -1, 1, 0})});
}

}  // namespace artin::recover
