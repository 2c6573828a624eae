#pragma once

/**
 * @file recover.hpp
 * @brief Admissible primes, matching of mod-ℓ Frobenius tables against Y,
 *        Schur–Zassenhaus lifting and conjugation signatures.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "artin/arith/number_field.hpp"
#include "artin/langlands/params.hpp"
#include "artin/matgroup/group.hpp"
#include "artin/recover/cyclo.hpp"

namespace artin::recover {

using arith::FieldRef;

/// Index m with K = Q(ζ_m); other fields are outside the supported catalog.
inline unsigned cyclotomic_index_of(const arith::NumberField& K) {
    const auto m = K.cyclotomic_index();
    if (!m) throw unsupported("recovery needs a cyclotomic Hecke field; " + K.label() + " is not one");
    return *m;
}

struct AdmissiblePrime {
    std::uint64_t ell = 0;
    std::uint64_t root = 0;   // image of the generator of K
    std::uint64_t zeta_M = 0; // image of ζ_M
    CycloPlace place;
};

/// ℓ <= search_bound with ℓ > A, ℓ split completely in K(ζ_M), and Y injective mod the place.
inline std::vector<AdmissiblePrime> admissible_primes(const arith::NumberField& K, const YSet& Y,
                                                      std::uint64_t search_bound) {
    if (search_bound < Y.A) throw invalid_input("search bound must be at least A");
    const unsigned m = cyclotomic_index_of(K);
    const unsigned L = static_cast<unsigned>(std::lcm<std::uint64_t>(m, Y.M));
    std::vector<AdmissiblePrime> out;
    for (std::uint64_t ell = Y.A + 1; ell <= search_bound; ++ell) {
        if (!arith::is_prime(ell) || (ell - 1) % L != 0) continue;
        if (!arith::splits_completely(K, ell)) continue;
        const auto gs = primitive_roots_of_unity(ell, L);
        CycloPlace pl{ell, L, gs.front()};
        if (!reduction_injective(Y, pl)) continue;
        out.push_back({ell, pl.image(m), pl.image(Y.M), pl});
    }
    if (out.empty())
        throw exhausted_search("no admissible prime up to " + std::to_string(search_bound) +
                               "; try a larger bound (need l = 1 mod " + std::to_string(L) + ")");
    return out;
}

struct ModLFrobTable {
    std::uint64_t ell = 0;
    std::vector<arith::Int> field;  // defining polynomial of K
    std::uint64_t root = 0;         // θ ↦ root mod ℓ
    std::vector<std::uint64_t> excluded;
    std::map<std::uint64_t, std::vector<std::uint64_t>> entries;  // p ↦ c_0..c_n mod ℓ
};

struct PrimeMatch {
    std::uint64_t p = 0;
    std::size_t index = 0;   // into Y
    bool unique = true;      // unique at every ℓ
};

struct RecoveryCertificate {
    unsigned A = 0, n = 0, M = 1, L = 1;
    std::vector<AdmissiblePrime> places;  // one per table, in table order
    std::vector<PrimeMatch> matches;      // ascending p
    std::vector<std::uint64_t> dropped;   // primes present in some but not all tables
    bool bound_consistent = true;         // every matched root order < A
    std::optional<langlands::SignVector> signature;
};

namespace detail {

inline void validate_table(const ModLFrobTable& t, const arith::NumberField& K, unsigned n) {
    if (!arith::is_prime(t.ell)) throw invalid_input("table modulus " + std::to_string(t.ell) + " is not prime");
    if (t.field != K.defining_poly()) throw invalid_input("table at l = " + std::to_string(t.ell) + " uses another field");
    const auto f = arith::to_zmod_poly(t.field, t.ell);
    if (!is_zero(f.evaluate(arith::Zmod::of(static_cast<long long>(t.root % t.ell), t.ell))))
        throw invalid_place("root " + std::to_string(t.root) + " is not a root of the field polynomial mod " +
                            std::to_string(t.ell));
    const std::set<std::uint64_t> ex(t.excluded.begin(), t.excluded.end());
    for (const auto& [p, c] : t.entries) {
        const std::string at = " at p = " + std::to_string(p) + ", l = " + std::to_string(t.ell);
        if (p == t.ell || ex.count(p)) throw invalid_input("table has an entry at an excluded prime" + at);
        if (c.size() != n + 1) throw invalid_input("entry has the wrong degree" + at);
        if (c[0] != 1) throw invalid_input("entry does not have constant term 1" + at);
        for (auto x : c)
            if (x >= t.ell) throw invalid_input("entry is not reduced mod l" + at);
    }
}

/// The place of Q(ζ_L) over ℓ restricting to θ ↦ root on K.
inline CycloPlace place_for(const ModLFrobTable& t, unsigned m, unsigned L) {
    for (auto g : primitive_roots_of_unity(t.ell, L)) {
        const CycloPlace pl{t.ell, L, g};
        if (pl.image(m) == t.root % t.ell) return pl;
    }
    throw invalid_place("no primitive " + std::to_string(L) + "-th root of unity mod " + std::to_string(t.ell) +
                        " restricts to root " + std::to_string(t.root));
}

}  // namespace detail

/// Finds, prime by prime, the unique member of Y congruent to every table entry.
inline RecoveryCertificate match_frobenius(const std::vector<ModLFrobTable>& tables, const YSet& Y,
                                           const arith::NumberField& K) {
    if (tables.empty()) throw invalid_input("no tables supplied");
    RecoveryCertificate cert;
    cert.A = Y.A;
    cert.n = Y.n;
    cert.M = Y.M;
    const unsigned m = cyclotomic_index_of(K);
    cert.L = static_cast<unsigned>(std::lcm<std::uint64_t>(m, Y.M));
    std::vector<std::map<std::vector<std::uint64_t>, std::size_t>> lookup;
    for (const auto& t : tables) {
        detail::validate_table(t, K, Y.n);
        if (t.ell <= Y.A) throw precondition_violation("l = " + std::to_string(t.ell) + " does not exceed A");
        if ((t.ell - 1) % cert.L != 0)
            throw precondition_violation("l = " + std::to_string(t.ell) + " does not split completely in Q(zeta_" +
                                         std::to_string(cert.L) + ")");
        const CycloPlace pl = detail::place_for(t, m, cert.L);
        std::map<std::vector<std::uint64_t>, std::size_t> red;
        for (std::size_t i = 0; i < Y.size(); ++i)
            if (!red.emplace(reduce_poly(Y.polys[i], pl), i).second)
                throw precondition_violation("Y does not reduce injectively at l = " + std::to_string(t.ell));
        cert.places.push_back({t.ell, pl.image(m), pl.image(Y.M), pl});
        lookup.push_back(std::move(red));
    }
    std::set<std::uint64_t> all, common;
    for (const auto& [p, c] : tables[0].entries) common.insert(p);
    for (const auto& t : tables) {
        std::set<std::uint64_t> here;
        for (const auto& [p, c] : t.entries) {
            here.insert(p);
            all.insert(p);
        }
        std::set<std::uint64_t> next;
        std::set_intersection(common.begin(), common.end(), here.begin(), here.end(), std::inserter(next, next.end()));
        common = std::move(next);
    }
    std::set_difference(all.begin(), all.end(), common.begin(), common.end(), std::back_inserter(cert.dropped));
    for (auto p : common) {
        std::optional<std::size_t> found;
        for (std::size_t k = 0; k < tables.size(); ++k) {
            const auto it = lookup[k].find(tables[k].entries.at(p));
            if (it == lookup[k].end())
                throw unmatched_prime("no member of Y matches the table at p = " + std::to_string(p) +
                                      ", l = " + std::to_string(tables[k].ell));
            if (found && *found != it->second)
                throw inconsistent_tables("tables disagree at p = " + std::to_string(p) + ": l = " +
                                          std::to_string(tables[0].ell) + " and l = " + std::to_string(tables[k].ell) +
                                          " match different members of Y");
            found = it->second;
        }
        cert.matches.push_back({p, *found, true});
        for (auto d : Y.polys[*found].orders)
            if (d >= Y.A) cert.bound_consistent = false;
    }
    return cert;
}

/// (+1)^a (−1)^b for R = (1−T)^a (1+T)^b.
inline langlands::SignVector conjugation_signature(const CycloCharPoly& R) {
    langlands::SignVector s;
    for (auto d : R.orders) {
        if (d > 2)
            throw invalid_conjugation_datum("conjugation datum has a root of order " + std::to_string(d));
        s.push_back(d == 1 ? 1 : -1);
    }
    return langlands::canonical(s);
}

// ---------------------------------------------------------------------------
// Schur–Zassenhaus lifting

struct ModMat {
    unsigned n = 0;
    std::vector<std::uint64_t> a;
    std::uint64_t at(unsigned i, unsigned j) const { return a[i * n + j]; }
    friend bool operator==(const ModMat& x, const ModMat& y) { return x.n == y.n && x.a == y.a; }
};

inline ModMat modmat_mul(const ModMat& x, const ModMat& y, std::uint64_t mod) {
    ModMat r{x.n, std::vector<std::uint64_t>(x.n * x.n, 0)};
    for (unsigned i = 0; i < x.n; ++i)
        for (unsigned k = 0; k < x.n; ++k) {
            const std::uint64_t v = x.at(i, k);
            if (!v) continue;
            for (unsigned j = 0; j < x.n; ++j) r.a[i * x.n + j] = (r.a[i * x.n + j] + arith::mulmod(v, y.at(k, j), mod)) % mod;
        }
    return r;
}

inline ModMat modmat_reduce(const ModMat& x, std::uint64_t mod) {
    ModMat r = x;
    for (auto& v : r.a) v %= mod;
    return r;
}

/// Inverse modulo ℓ^j; pivots are chosen among units.
inline ModMat modmat_inverse(const ModMat& x, std::uint64_t ell, std::uint64_t mod) {
    const unsigned n = x.n;
    std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(2 * n, 0));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) a[i][j] = x.at(i, j) % mod;
        a[i][n + i] = 1 % mod;
    }
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = col;
        while (piv < n && a[piv][col] % ell == 0) ++piv;
        if (piv == n) throw invalid_input("matrix is singular modulo " + std::to_string(ell));
        std::swap(a[col], a[piv]);
        const std::uint64_t inv = arith::invmod(a[col][col], mod);
        for (auto& v : a[col]) v = arith::mulmod(v, inv, mod);
        for (unsigned i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const std::uint64_t f = a[i][col];
            for (unsigned k = 0; k < 2 * n; ++k) a[i][k] = (a[i][k] + mod - arith::mulmod(f, a[col][k], mod)) % mod;
        }
    }
    ModMat r{n, std::vector<std::uint64_t>(n * n)};
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) r.a[i * n + j] = a[i][n + j];
    return r;
}

/// det(1 − X T) modulo mod, low-to-high.
inline std::vector<std::uint64_t> modmat_rev_charpoly(const ModMat& x, std::uint64_t mod) {
    arith::Matrix<arith::Zmod> A(x.n, x.n, arith::Zmod::of(0LL, mod));
    for (unsigned i = 0; i < x.n; ++i)
        for (unsigned j = 0; j < x.n; ++j) A(i, j) = arith::Zmod{x.at(i, j), mod};
    std::vector<std::uint64_t> out;
    for (const auto& c : arith::reversed_charpoly(A, arith::Zmod::of(1LL, mod))) out.push_back(c.v);
    return out;
}

struct LiftStep {
    unsigned precision = 0;        // lifted modulo ℓ^precision
    std::size_t defects_before = 0; // table relations failing for the naive lift at this modulus
};

struct LiftResult {
    std::uint64_t ell = 0;
    unsigned k = 0;
    std::uint64_t modulus = 1;
    std::vector<ModMat> images;               // per group element, entries in [0, ℓ^k)
    std::vector<std::size_t> generator_indices;
    std::vector<LiftStep> transcript;
    std::size_t relations_checked = 0;
    bool homomorphism = false;  // φ(g)φ(h) = φ(gh) mod ℓ^k for every pair
    bool reduces_to_input = false;
};

inline std::size_t count_defects(const matgroup::FiniteMatrixGroup& G, const std::vector<ModMat>& phi,
                                 const std::vector<std::vector<std::size_t>>& table, std::uint64_t mod) {
    std::size_t bad = 0;
    for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h)
            if (!(modmat_mul(phi[g], phi[h], mod) == modmat_reduce(phi[table[g][h]], mod))) ++bad;
    return bad;
}

/// Lifts the inclusion G ⊂ GL_n(F_ℓ) to a homomorphism into GL_n(Z/ℓ^k).
inline LiftResult schur_zassenhaus_lift(const matgroup::FiniteMatrixGroup& G, unsigned k) {
    const auto& F = G.field();
    if (F.k() != 1) throw unsupported("lifting needs a prime field; got F_" + std::to_string(F.q()));
    const std::uint64_t ell = F.p();
    if (k == 0) throw invalid_input("precision must be positive");
    if (G.order() % ell == 0)
        throw precondition_violation(std::to_string(ell) + " divides |G| = " + std::to_string(G.order()));
    std::uint64_t mod_k = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (mod_k > (std::uint64_t(1) << 40) / ell) throw invalid_input("modulus l^k is too large");
        mod_k *= ell;
    }
    const std::size_t ord = G.order();
    const unsigned n = G.n();
    std::vector<std::vector<std::size_t>> table(ord, std::vector<std::size_t>(ord));
    for (std::size_t g = 0; g < ord; ++g)
        for (std::size_t h = 0; h < ord; ++h) table[g][h] = G.product(g, h);
    LiftResult r;
    r.ell = ell;
    r.k = k;
    r.modulus = mod_k;
    r.generator_indices = G.generator_indices();
    std::vector<ModMat> phi(ord);
    for (std::size_t g = 0; g < ord; ++g) {
        phi[g] = {n, std::vector<std::uint64_t>(n * n)};
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) phi[g].a[i * n + j] = G.element(g).at(i, j);
    }
    r.transcript.push_back({1, 0});
    std::uint64_t mod = ell;
    for (unsigned j = 1; j < k; ++j) {
        mod *= ell;
        LiftStep step{j + 1, count_defects(G, phi, table, mod)};
        const std::uint64_t inv_order = arith::invmod(ord % mod, mod);
        std::vector<ModMat> inv(ord);
        for (std::size_t h = 0; h < ord; ++h) inv[h] = modmat_inverse(phi[h], ell, mod);
        std::vector<ModMat> next(ord);
        for (std::size_t g = 0; g < ord; ++g) {
            // ψ(g) = |G|^{-1} Σ_h φ(gh) φ(h)^{-1}
            ModMat acc{n, std::vector<std::uint64_t>(n * n, 0)};
            for (std::size_t h = 0; h < ord; ++h) {
                const ModMat t = modmat_mul(modmat_reduce(phi[table[g][h]], mod), inv[h], mod);
                for (std::size_t e = 0; e < acc.a.size(); ++e) acc.a[e] = (acc.a[e] + t.a[e]) % mod;
            }
            for (auto& v : acc.a) v = arith::mulmod(v, inv_order, mod);
            next[g] = std::move(acc);
        }
        phi = std::move(next);
        r.transcript.push_back(step);
    }
    r.images = phi;
    r.relations_checked = ord * ord;
    r.homomorphism = count_defects(G, phi, table, mod_k) == 0;
    r.reduces_to_input = true;
    for (std::size_t g = 0; g < ord; ++g)
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (phi[g].at(i, j) % ell != G.element(g).at(i, j)) r.reduces_to_input = false;
    return r;
}

/// Teichmüller representative of a mod ℓ in Z/ℓ^k.
inline std::uint64_t teichmuller(std::uint64_t a, std::uint64_t ell, unsigned k, std::uint64_t mod) {
    std::uint64_t x = a % mod;
    for (unsigned i = 1; i < k; ++i) x = arith::powmod(x, ell, mod);
    return x;
}

/// Reductions mod ℓ^k of the members of Y whose root orders all divide ℓ − 1, via Teichmüller roots of unity.
inline std::map<std::vector<std::uint64_t>, std::size_t> teichmuller_reductions(const YSet& Y, std::uint64_t ell,
                                                                                 unsigned k) {
    std::uint64_t mod = 1;
    for (unsigned i = 0; i < k; ++i) mod *= ell;
    const std::uint64_t g = arith::primitive_root(ell);
    std::map<std::vector<std::uint64_t>, std::size_t> out;
    for (std::size_t i = 0; i < Y.size(); ++i) {
        const auto& R = Y.polys[i];
        bool ok = true;
        std::vector<std::uint64_t> roots;
        for (auto e : R.exponents) {
            const unsigned d = R.M / std::gcd(e, R.M);
            if ((ell - 1) % d != 0) {
                ok = false;
                break;
            }
            // ζ_M^e = ζ_d^{e d / M}; ζ_d ↦ Teichmüller(g^{(ℓ−1)/d})
            const std::uint64_t zd = teichmuller(arith::powmod(g, (ell - 1) / d, ell), ell, k, mod);
            roots.push_back(arith::powmod(zd, static_cast<std::uint64_t>(e) * d / R.M, mod));
        }
        if (!ok) continue;
        std::vector<std::uint64_t> c{1 % mod};
        for (auto z : roots) {
            c.push_back(0);
            for (std::size_t t = c.size() - 1; t >= 1; --t) c[t] = (c[t] + mod - arith::mulmod(c[t - 1], z, mod)) % mod;
        }
        out.emplace(c, i);
    }
    return out;
}

}  // namespace artin::recover
