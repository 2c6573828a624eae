#pragma once

/**
 * @file lp_filtration.hpp
 * @brief Certificates for chains G ⊇ G1 ⊇ G2 ⊇ G3 of Larsen–Pink type.
 *
 * G1/G2 is identified as a product of nonabelian simple groups whose orders
 * occur among PSL_m(p^k) (m <= 4) and PSp_4(p^k) with p^k <= 81.
 */

#include <string>
#include <vector>

#include "artin/arith/integer.hpp"
#include "artin/matgroup/group.hpp"

namespace artin::matgroup {

struct LieTypeEntry {
    std::string family;  // "PSL" or "PSp"
    unsigned degree = 0; // m for PSL_m, 4 for PSp_4
    std::uint64_t q = 0;
    arith::Int order;
};

inline arith::Int sl_order(unsigned m, std::uint64_t q) {
    arith::Int Q(q), r = arith::ipow(Q, m * (m - 1) / 2);
    for (unsigned i = 2; i <= m; ++i) r *= arith::ipow(Q, i) - 1;
    return r;
}

inline arith::Int sp_order(unsigned half, std::uint64_t q) {
    arith::Int Q(q), r = arith::ipow(Q, half * half);
    for (unsigned i = 1; i <= half; ++i) r *= arith::ipow(Q, 2 * i) - 1;
    return r;
}

/// Simple groups of Lie type in characteristic p from the desk-scale catalog, ordered by (family, degree, q).
inline std::vector<LieTypeEntry> lie_type_catalog(std::uint64_t p) {
    std::vector<LieTypeEntry> out;
    std::vector<std::uint64_t> qs;
    for (std::uint64_t q = p; q <= 81; q *= p) qs.push_back(q);
    for (unsigned m = 2; m <= 4; ++m)
        for (auto q : qs) {
            if (m == 2 && q <= 3) continue;  // PSL_2(2), PSL_2(3) are solvable
            const std::uint64_t z = std::gcd<std::uint64_t>(m, q - 1);
            out.push_back({"PSL", m, q, sl_order(m, q) / z});
        }
    for (auto q : qs) {
        if (q == 2) continue;  // PSp_4(2) ≅ S_6 is not simple
        out.push_back({"PSp", 4, q, sp_order(2, q) / std::gcd<std::uint64_t>(2, q - 1)});
    }
    return out;
}

struct LpFiltrationCertificate {
    bool accepted = false;
    std::string failed_clause;  // empty when accepted
    std::size_t index_G1 = 0;   // [G:G1]
    std::size_t order_G1 = 0, order_G2 = 0, order_G3 = 0;
    std::vector<LieTypeEntry> factors;  // identification of G1/G2
    std::vector<std::vector<LieTypeEntry>> factor_candidates;
};

inline LpFiltrationCertificate check_lp_filtration(const FiniteMatrixGroup& G, const Subset& G1, const Subset& G2,
                                                   const Subset& G3) {
    LpFiltrationCertificate c;
    const std::uint64_t p = G.field().p();
    auto reject = [&](std::string clause) {
        c.accepted = false;
        c.failed_clause = std::move(clause);
        return c;
    };
    for (const auto* S : {&G1, &G2, &G3})
        if (S->size() != G.order() || !is_subgroup(G, *S)) throw invalid_input("chain member is not a subgroup of G");
    c.order_G1 = count(G1);
    c.order_G2 = count(G2);
    c.order_G3 = count(G3);
    c.index_G1 = G.order() / c.order_G1;
    for (std::size_t i = 0; i < G.order(); ++i) {
        if (G2[i] && !G1[i]) return reject("G2 is not contained in G1");
        if (G3[i] && !G2[i]) return reject("G3 is not contained in G2");
    }
    if (!is_normal(G, G1)) return reject("G1 is not normal in G");
    if (!is_normal(G, G2)) return reject("G2 is not normal in G");
    if (!is_normal(G, G3)) return reject("G3 is not normal in G");
    if (!is_p_power(c.order_G3, p)) return reject("G3 is not a p-group");
    const Subset comm = commutator(G, G2, G2);
    for (std::size_t i = 0; i < G.order(); ++i)
        if (comm[i] && !G3[i]) return reject("G2/G3 is not abelian");
    if ((c.order_G2 / c.order_G3) % p == 0) return reject("order of G2/G3 is divisible by p");
    if (G1 == G2) {
        c.accepted = true;
        return c;
    }
    // minimal normal subgroups of G1 strictly above G2
    const auto between = normal_subgroups_between(G, G1, G2);
    std::vector<Subset> minimal;
    for (const auto& N : between) {
        if (N == G2) continue;
        bool is_min = true;
        for (const auto& M : minimal) {
            bool inside = true;
            for (std::size_t i = 0; i < G.order() && inside; ++i)
                if (M[i] && !N[i]) inside = false;
            if (inside) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(N);
    }
    std::vector<std::size_t> all_gens;
    arith::Int product_order = 1;
    const auto catalog = lie_type_catalog(p);
    for (const auto& N : minimal) {
        const std::size_t fo = count(N) / c.order_G2;
        product_order *= fo;
        if (normal_subgroups_between(G, N, G2).size() != 2)
            return reject("G1/G2 factor of order " + std::to_string(fo) + " is not simple");
        const Subset cn = commutator(G, N, N);
        bool abelian = true;
        for (std::size_t i = 0; i < G.order() && abelian; ++i)
            if (cn[i] && !G2[i]) abelian = false;
        if (abelian) return reject("G1/G2 factor of order " + std::to_string(fo) + " is abelian");
        std::vector<LieTypeEntry> cands;
        for (const auto& e : catalog)
            if (e.order == fo) cands.push_back(e);
        if (cands.empty())
            return reject("G1/G2 factor of order " + std::to_string(fo) + " matches no group of Lie type in characteristic " +
                          std::to_string(p));
        c.factors.push_back(cands.front());
        c.factor_candidates.push_back(cands);
        for (std::size_t i = 0; i < G.order(); ++i)
            if (N[i]) all_gens.push_back(i);
    }
    const Subset prod = generate(G, G2, all_gens);
    if (prod != G1 || product_order != arith::Int(c.order_G1 / c.order_G2))
        return reject("G1/G2 is not the direct product of its minimal normal subgroups");
    c.accepted = true;
    return c;
}

}  // namespace artin::matgroup
