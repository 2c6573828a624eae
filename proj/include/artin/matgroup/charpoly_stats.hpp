#pragma once

/**
 * @file charpoly_stats.hpp
 * @brief Characteristic-polynomial histograms, the C(η,N) property and its consequences.
 */

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "artin/arith/integer.hpp"
#include "artin/matgroup/group.hpp"

namespace artin::matgroup {

using arith::Rational;
using CharPoly = std::vector<elem>;  // det(1 - gT), low-to-high

/// det(1 - gT) ↦ number of g with that polynomial; map order is lexicographic on coefficients.
struct CharPolyHistogram {
    std::map<CharPoly, std::size_t> counts;
    std::vector<CharPoly> per_element;  // indexed like G.elements()

    std::size_t max_count() const {
        std::size_t m = 0;
        for (const auto& [k, v] : counts) m = std::max(m, v);
        return m;
    }
    std::size_t count_of(const CharPoly& f) const {
        auto it = counts.find(f);
        return it == counts.end() ? 0 : it->second;
    }
    std::size_t distinct() const { return counts.size(); }
};

inline CharPolyHistogram charpoly_histogram(const FiniteMatrixGroup& G) {
    CharPolyHistogram h;
    h.per_element.reserve(G.order());
    for (const auto& g : G.elements()) {
        auto f = rev_charpoly(G.field(), g);
        ++h.counts[f];
        h.per_element.push_back(std::move(f));
    }
    return h;
}

/// M_G(g): elements sharing g's characteristic polynomial.
inline std::size_t charpoly_multiplicity(const FiniteMatrixGroup& G, const CharPolyHistogram& h, const MatFq& g) {
    return h.count_of(rev_charpoly(G.field(), g));
}

struct CPropertyResult {
    bool holds = false;
    std::vector<CharPoly> witness_classes;  // the N largest classes
    std::size_t witness_size = 0;           // |H|
    Rational required;                      // (1 - η)|G|
};

/// Classes ordered by count descending, ties by polynomial ascending.
inline std::vector<std::pair<CharPoly, std::size_t>> ranked_classes(const CharPolyHistogram& h) {
    std::vector<std::pair<CharPoly, std::size_t>> v(h.counts.begin(), h.counts.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    return v;
}

inline CPropertyResult check_C_property(const FiniteMatrixGroup& G, const CharPolyHistogram& h, const Rational& eta,
                                        std::size_t N) {
    if (eta <= 0 || eta >= 1) throw invalid_input("eta must lie in (0,1)");
    if (N == 0) throw invalid_input("N must be positive");
    CPropertyResult r;
    const auto ranked = ranked_classes(h);
    for (std::size_t i = 0; i < ranked.size() && i < N; ++i) {
        r.witness_classes.push_back(ranked[i].first);
        r.witness_size += ranked[i].second;
    }
    r.required = (1 - eta) * Rational(static_cast<long long>(G.order()));
    r.holds = Rational(static_cast<long long>(r.witness_size)) >= r.required;
    return r;
}

inline CPropertyResult check_C_property(const FiniteMatrixGroup& G, const Rational& eta, std::size_t N) {
    return check_C_property(G, charpoly_histogram(G), eta, N);
}

struct InheritanceResult {
    bool premise = false;          // G satisfies C(η,N)
    bool conclusion = false;       // G' satisfies C(dη,N)
    std::size_t index = 0;         // [G:G']
    std::size_t intersected = 0;   // |H ∩ G'| for G's witness H
    bool implication = true;       // premise ⇒ conclusion
};

/// Checks C(η,N) for G ⇒ C(dη,N) for G' on an explicit instance. G' is given as a subset of G.
inline InheritanceResult check_inheritance(const FiniteMatrixGroup& G, const Subset& sub, const Rational& eta,
                                           std::size_t N, std::size_t d) {
    if (!is_subgroup(G, sub)) throw invalid_input("G' is not a subgroup of G");
    if (d == 0) throw invalid_input("d must be positive");
    InheritanceResult r;
    r.index = G.order() / count(sub);
    if (r.index > d) throw precondition_violation("index [G:G'] = " + std::to_string(r.index) + " exceeds d");
    if (eta * Rational(static_cast<long long>(d)) >= 1) throw precondition_violation("eta must be below 1/d");
    const auto h = charpoly_histogram(G);
    const auto c = check_C_property(G, h, eta, N);
    r.premise = c.holds;
    // H ∩ G' realizes at most N polynomials, so it is a candidate witness for G'
    for (std::size_t i = 0; i < G.order(); ++i)
        if (sub[i] && std::find(c.witness_classes.begin(), c.witness_classes.end(), h.per_element[i]) !=
                          c.witness_classes.end())
            ++r.intersected;
    const auto Gp = as_group(G, sub);
    const Rational deta = eta * Rational(static_cast<long long>(d));
    const auto cp = check_C_property(Gp, deta, N);
    r.conclusion = cp.holds;
    const bool witness_ok =
        Rational(static_cast<long long>(r.intersected)) >= (1 - deta) * Rational(static_cast<long long>(count(sub)));
    r.implication = !r.premise || (r.conclusion && witness_ok);
    return r;
}

struct Irr1Result {
    bool premise = false;      // G satisfies C(η,N)
    std::size_t abelian_order = 0;
    std::size_t index = 0;     // [G:A]
    std::size_t witness_in_A = 0;
    Rational lower;            // (1 - C_n η)|A|
    Rational upper;            // n! N
    bool chain_ok = false;     // lower <= |H ∩ A| <= upper
    bool ok = false;           // premise ⇒ chain
};

/// Abelian-normal-subgroup inequality chain for a group of order prime to p.
inline Irr1Result check_irr1_bound(const FiniteMatrixGroup& G, const Rational& eta, std::size_t N, const Rational& Cn) {
    if (G.order() % G.field().p() == 0) throw precondition_violation("group order divisible by the characteristic");
    if (eta * Cn >= 1) throw precondition_violation("eta must be below 1/C_n");
    Irr1Result r;
    // largest abelian normal subgroup found by exhaustive search
    Subset A;
    for (const auto& S : normal_subgroups(G))
        if (is_abelian(G, S) && count(S) > count(A)) A = S;
    r.abelian_order = count(A);
    r.index = G.order() / r.abelian_order;
    if (Rational(static_cast<long long>(r.index)) > Cn)
        throw search_failure("no abelian normal subgroup of index at most C_n (best index " +
                             std::to_string(r.index) + ")");
    const auto h = charpoly_histogram(G);
    const auto c = check_C_property(G, h, eta, N);
    r.premise = c.holds;
    for (std::size_t i = 0; i < G.order(); ++i)
        if (A[i] && std::find(c.witness_classes.begin(), c.witness_classes.end(), h.per_element[i]) !=
                        c.witness_classes.end())
            ++r.witness_in_A;
    r.lower = (1 - Cn * eta) * Rational(static_cast<long long>(r.abelian_order));
    r.upper = Rational(arith::factorial(G.n()) * N);
    const Rational w(static_cast<long long>(r.witness_in_A));
    r.chain_ok = r.lower <= w && w <= r.upper;
    r.ok = !r.premise || r.chain_ok;
    return r;
}

}  // namespace artin::matgroup
