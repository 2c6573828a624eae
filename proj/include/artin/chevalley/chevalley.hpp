#pragma once

/**
 * @file chevalley.hpp
 * @brief SL_m(F_q) and Sp_2m(F_q): exact orders, generators, order bounds,
 *        Steinberg unipotent counts and the characteristic-polynomial counting formula.
 *
 * The symplectic form is x^T J y with J = antidiag(1,...,1,-1,...,-1).
 */

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "artin/arith/integer.hpp"
#include "artin/matgroup/charpoly_stats.hpp"
#include "artin/matgroup/group.hpp"
#include "artin/matgroup/lp_filtration.hpp"

namespace artin::chevalley {

using arith::Int;
using arith::Rational;
using matgroup::FiniteMatrixGroup;
using matgroup::MatFq;

enum class Family { SL, Sp };

inline std::string to_string(Family f) { return f == Family::SL ? "SL" : "Sp"; }

inline Family parse_family(const std::string& s) {
    if (s == "SL") return Family::SL;
    if (s == "Sp") return Family::Sp;
    throw invalid_input("unknown family '" + s + "' (expected SL or Sp)");
}

struct ChevalleySpec {
    Family family = Family::SL;
    unsigned n = 0;      // natural degree
    std::uint32_t q = 0;
    unsigned rank = 0;
    unsigned dim = 0;
    Int order;

    std::string label() const { return to_string(family) + std::to_string(n) + "(F_" + std::to_string(q) + ")"; }
};

inline ChevalleySpec make_spec(Family family, unsigned n, std::uint32_t q) {
    if (arith::prime_power(q).first == 0) throw invalid_input("q = " + std::to_string(q) + " is not a prime power");
    ChevalleySpec s;
    s.family = family;
    s.n = n;
    s.q = q;
    if (family == Family::SL) {
        if (n < 2) throw invalid_input("SL_n needs n >= 2");
        s.rank = n - 1;
        s.dim = n * n - 1;
        s.order = matgroup::sl_order(n, q);
    } else {
        if (n < 2 || n % 2 != 0) throw invalid_input("Sp_n needs even n >= 2");
        const unsigned m = n / 2;
        s.rank = m;
        s.dim = 2 * m * m + m;
        s.order = matgroup::sp_order(m, q);
    }
    return s;
}

/// Gram matrix of the symplectic form on F_q^n.
inline MatFq symplectic_gram(const arith::FiniteField& F, unsigned n) {
    MatFq J;
    J.n = static_cast<std::uint8_t>(n);
    for (unsigned i = 0; i < n; ++i) J.set(i, n - 1 - i, i < n / 2 ? 1 : F.neg(1));
    return J;
}

/// Permutation Q with Q^T J Q = [[0, I], [-I, 0]] (J the antidiagonal Gram matrix).
inline MatFq to_block_form(const arith::FiniteField& F, unsigned n) {
    (void)F;
    const unsigned m = n / 2;
    MatFq Q;
    Q.n = static_cast<std::uint8_t>(n);
    // f_i = e_i for i < m, f_{m+i} = e_{n-1-i}
    for (unsigned i = 0; i < m; ++i) {
        Q.set(i, i, 1);
        Q.set(n - 1 - i, m + i, 1);
    }
    return Q;
}

inline MatFq block_gram(const arith::FiniteField& F, unsigned n) {
    const unsigned m = n / 2;
    MatFq J;
    J.n = static_cast<std::uint8_t>(n);
    for (unsigned i = 0; i < m; ++i) {
        J.set(i, m + i, 1);
        J.set(m + i, i, F.neg(1));
    }
    return J;
}

/// Standard generators: elementary transvections (SL) or symplectic transvections (Sp).
inline std::vector<MatFq> standard_generators(const arith::FiniteField& F, const ChevalleySpec& s) {
    std::vector<MatFq> gens;
    const unsigned n = s.n;
    std::vector<matgroup::elem> scalars;
    for (unsigned t = 0; t < F.k(); ++t) scalars.push_back(t == 0 ? 1 : F.pow(F.k() == 1 ? 1 : F.p(), t));
    if (s.family == Family::SL) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                if (i == j) continue;
                for (auto a : scalars) {
                    MatFq g = matgroup::identity(n);
                    g.set(i, j, a);
                    gens.push_back(g);
                }
            }
        return gens;
    }
    const MatFq J = symplectic_gram(F, n);
    std::vector<matgroup::Vec> vs;
    for (unsigned i = 0; i < n; ++i) {
        matgroup::Vec v(n, 0);
        v[i] = 1;
        vs.push_back(v);
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            matgroup::Vec v(n, 0);
            v[i] = v[j] = 1;
            vs.push_back(v);
        }
    for (const auto& v : vs) {
        const auto Jv = matgroup::apply(F, J, v);
        for (auto a : scalars) {
            MatFq g = matgroup::identity(n);
            for (unsigned r = 0; r < n; ++r)
                for (unsigned c = 0; c < n; ++c) g.set(r, c, F.add(g.at(r, c), F.mul(a, F.mul(v[r], Jv[c]))));
            gens.push_back(g);
        }
    }
    return gens;
}

inline FiniteMatrixGroup make_group(const ChevalleySpec& s, std::size_t cap = matgroup::default_cap) {
    if (s.order > Int(cap))
        throw enumeration_overflow(s.label() + " has order " + s.order.str() + " above the cap " + std::to_string(cap));
    auto F = arith::FiniteField::make(s.q);
    auto G = FiniteMatrixGroup::close(F, s.n, standard_generators(*F, s), cap);
    if (Int(G.order()) != s.order)
        throw verification_failure(s.label() + ": closure has " + std::to_string(G.order()) +
                                   " elements, formula gives " + s.order.str());
    return G;
}

/// Sign of a + b·√q, exactly.
inline int sign_sqrt(const Int& a, const Int& b, std::uint64_t q) {
    auto sg = [](const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
    const int sa = sg(a), sb = sg(b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const Int lhs = a * a, rhs = b * b * Int(q);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

/// (√q + s)^(2d) = (q + 1 + 2s√q)^d as a + b√q with s = ±1.
inline std::pair<Int, Int> sqrt_power(std::uint64_t q, int s, unsigned d) {
    Int a = 1, b = 0;
    const Int ua = Int(q) + 1, ub = Int(2 * s);
    for (unsigned i = 0; i < d; ++i) {
        const Int na = a * ua + b * ub * Int(q);
        const Int nb = a * ub + b * ua;
        a = na;
        b = nb;
    }
    return {a, b};
}

struct OrderBounds {
    Int order;
    Int linear_lower, linear_upper;  // (q-1)^dim, (q+1)^dim
    std::pair<Int, Int> sqrt_lower, sqrt_upper;  // coordinates in Z[√q]
    bool linear_ok = false;
    bool sqrt_ok = false;
    bool ok() const { return linear_ok && sqrt_ok; }
};

inline OrderBounds verify_order_bounds(const ChevalleySpec& s) {
    OrderBounds b;
    b.order = s.order;
    b.linear_lower = arith::ipow(Int(s.q - 1), s.dim);
    b.linear_upper = arith::ipow(Int(s.q + 1), s.dim);
    b.linear_ok = b.linear_lower <= s.order && s.order <= b.linear_upper;
    b.sqrt_lower = sqrt_power(s.q, -1, s.dim);
    b.sqrt_upper = sqrt_power(s.q, 1, s.dim);
    const bool lo = sign_sqrt(s.order - b.sqrt_lower.first, -b.sqrt_lower.second, s.q) >= 0;
    const bool hi = sign_sqrt(b.sqrt_upper.first - s.order, b.sqrt_upper.second, s.q) >= 0;
    b.sqrt_ok = lo && hi;
    return b;
}

inline bool is_semisimple_element(const arith::FiniteField& F, const MatFq& A) {
    return matgroup::element_order(F, A) % F.p() != 0;
}

/// Dimension of the centralizer of a semisimple element in the algebraic group.
inline unsigned centralizer_dimension(const ChevalleySpec& s, const arith::FiniteField& F, const MatFq& A) {
    const auto cp = matgroup::charpoly(F, A);
    const auto factors = arith::factor_trial(F, arith::make_fq_poly_raw(F, cp));
    if (s.family == Family::SL) {
        unsigned sum = 0;
        for (const auto& [f, k] : factors) sum += static_cast<unsigned>(f.degree()) * k * k;
        return sum - 1;
    }
    unsigned twice = 0;  // twice the dimension
    for (const auto& [f, k] : factors) {
        const auto c = arith::raw_coeffs(f);
        const bool pm1 = f.degree() == 1 && (c[0] == F.neg(1) || c[0] == 1);
        if (pm1) {
            if (k % 2 != 0) throw verification_failure("odd multiplicity of eigenvalue ±1 in a symplectic element");
            const unsigned h = k / 2;
            twice += 2 * (2 * h * h + h);
        } else {
            twice += static_cast<unsigned>(f.degree()) * k * k;
        }
    }
    return twice / 2;
}

struct SemisimpleClassData {
    MatFq representative;
    matgroup::CharPoly charpoly;   // det(1 - AT)
    unsigned d = 0, l = 0;
    std::size_t class_size = 0;
    std::size_t centralizer_order = 0;
    std::size_t unipotent_observed = 0;
    Int unipotent_predicted;       // q^(d-l)
    std::size_t M_observed = 0;
    Rational M_predicted;          // q^(d-l) |G| / |C(A)|
    Rational sandwich_lower, sandwich_upper;
    bool steinberg_ok = false;
    bool count_ok = false;
    bool sandwich_ok = false;
};

/// Elements of G commuting with A.
inline std::vector<std::size_t> centralizer_indices(const FiniteMatrixGroup& G, const MatFq& A) {
    std::vector<std::size_t> out;
    const auto& F = G.field();
    for (std::size_t i = 0; i < G.order(); ++i) {
        const MatFq& g = G.element(i);
        if (matgroup::mul(F, g, A) == matgroup::mul(F, A, g)) out.push_back(i);
    }
    return out;
}

inline std::pair<std::size_t, Int> steinberg_unipotent_count(const ChevalleySpec& s, const FiniteMatrixGroup& G,
                                                             const MatFq& A) {
    const auto& F = G.field();
    if (!G.contains(A)) throw invalid_input("A is not an element of " + s.label());
    if (!is_semisimple_element(F, A)) throw invalid_input("A is not semisimple (order divisible by p)");
    std::size_t observed = 0;
    for (auto i : centralizer_indices(G, A))
        if (matgroup::is_unipotent(F, G.element(i))) ++observed;
    const unsigned d = centralizer_dimension(s, F, A);
    return {observed, arith::ipow(Int(s.q), d - s.rank)};
}

inline SemisimpleClassData analyze_class(const ChevalleySpec& s, const FiniteMatrixGroup& G,
                                         const matgroup::CharPolyHistogram& h, const MatFq& A) {
    const auto& F = G.field();
    if (!G.contains(A)) throw invalid_input("A is not an element of " + s.label());
    if (!is_semisimple_element(F, A)) throw invalid_input("A is not semisimple (order divisible by p)");
    SemisimpleClassData c;
    c.representative = A;
    c.charpoly = matgroup::rev_charpoly(F, A);
    c.d = centralizer_dimension(s, F, A);
    c.l = s.rank;
    const auto cent = centralizer_indices(G, A);
    c.centralizer_order = cent.size();
    c.class_size = G.order() / cent.size();
    for (auto i : cent)
        if (matgroup::is_unipotent(F, G.element(i))) ++c.unipotent_observed;
    const Int qdl = arith::ipow(Int(s.q), c.d - c.l);
    c.unipotent_predicted = qdl;
    c.steinberg_ok = Int(c.unipotent_observed) == qdl;
    c.M_observed = h.count_of(c.charpoly);
    const Rational order(static_cast<long long>(G.order()));
    c.M_predicted = Rational(qdl) * order / Rational(static_cast<long long>(c.centralizer_order));
    c.count_ok = c.M_predicted == Rational(static_cast<long long>(c.M_observed));
    const Rational base = order / Rational(arith::ipow(Int(s.q), c.l));
    Rational lo = base, hi = base;
    for (unsigned i = 0; i < c.d; ++i) {
        lo *= Rational(Int(s.q), Int(s.q + 1));
        hi *= Rational(Int(s.q), Int(s.q - 1));
    }
    c.sandwich_lower = lo;
    c.sandwich_upper = hi;
    const Rational m(static_cast<long long>(c.M_observed));
    c.sandwich_ok = lo <= m && m <= hi;
    return c;
}

/// Counting formula for one element: (M_observed, M_predicted, sandwich).
inline SemisimpleClassData verify_counting_formula(const ChevalleySpec& s, const FiniteMatrixGroup& G, const MatFq& A) {
    return analyze_class(s, G, matgroup::charpoly_histogram(G), A);
}

/// Smallest representative of each semisimple conjugacy class.
inline std::vector<MatFq> semisimple_class_representatives(const FiniteMatrixGroup& G) {
    std::vector<MatFq> reps;
    for (const auto& cls : G.conjugacy_classes()) {
        const MatFq& A = G.element(cls.front());
        if (is_semisimple_element(G.field(), A)) reps.push_back(A);
    }
    return reps;
}

inline std::vector<SemisimpleClassData> census(const ChevalleySpec& s, const FiniteMatrixGroup& G) {
    const auto h = matgroup::charpoly_histogram(G);
    std::vector<SemisimpleClassData> out;
    for (const auto& A : semisimple_class_representatives(G)) out.push_back(analyze_class(s, G, h, A));
    return out;
}

// ---------------------------------------------------------------------------
// Block-diagonal products.

struct LeviResult {
    std::size_t M_D = 0;
    std::vector<std::size_t> M_factors;
    Int C2;  // n!/(n_1!...n_m!)
    Int bound;
    bool ok = false;
};

inline MatFq block_diagonal(const std::vector<MatFq>& blocks) {
    MatFq m;
    unsigned n = 0;
    for (const auto& b : blocks) n += b.n;
    if (n > matgroup::max_dim) throw unsupported("block-diagonal degree exceeds 6");
    m.n = static_cast<std::uint8_t>(n);
    unsigned off = 0;
    for (const auto& b : blocks) {
        for (unsigned i = 0; i < b.n; ++i)
            for (unsigned j = 0; j < b.n; ++j) m.set(off + i, off + j, b.at(i, j));
        off += b.n;
    }
    return m;
}

inline LeviResult verify_levi_product_bound(const std::vector<FiniteMatrixGroup>& factors,
                                            std::size_t cap = matgroup::default_cap) {
    if (factors.empty()) throw invalid_input("no factors");
    const auto& F = factors.front().field();
    Int total = 1;
    unsigned n = 0;
    LeviResult r;
    r.C2 = 1;
    for (const auto& D : factors) {
        if (D.field().q() != F.q()) throw invalid_input("factors over different fields");
        total *= D.order();
        n += D.n();
        r.M_factors.push_back(matgroup::charpoly_histogram(D).max_count());
    }
    if (total > Int(cap)) throw enumeration_overflow("product of order " + total.str() + " exceeds the cap");
    r.C2 = arith::factorial(n);
    for (const auto& D : factors) r.C2 /= arith::factorial(D.n());
    // exhaustive scan of all tuples
    std::map<matgroup::CharPoly, std::size_t> counts;
    std::vector<std::size_t> idx(factors.size(), 0);
    while (true) {
        std::vector<MatFq> blocks;
        for (std::size_t i = 0; i < factors.size(); ++i) blocks.push_back(factors[i].element(idx[i]));
        ++counts[matgroup::rev_charpoly(F, block_diagonal(blocks))];
        std::size_t k = 0;
        while (k < factors.size() && ++idx[k] == factors[k].order()) idx[k++] = 0;
        if (k == factors.size()) break;
    }
    for (const auto& [f, c] : counts) r.M_D = std::max(r.M_D, c);
    r.bound = r.C2;
    for (auto m : r.M_factors) r.bound *= m;
    r.ok = Int(r.M_D) <= r.bound;
    return r;
}

// ---------------------------------------------------------------------------
// The inequality chain bounding q.

struct Main1Constants {
    Rational Cn;  // C(n)
    Rational C1;  // 1/∏|Z(G_i)|
    Rational C2;  // n!/(n_1!...n_m!)
    Rational K;   // M_G(A) <= K |G|/q^l
};

struct ChainLink {
    std::string name;
    Rational lhs, rhs;
    bool holds = false;
};

struct Main1Report {
    bool skipped = false;        // G1 = G2: handled by the abelian case
    std::vector<ChainLink> links;
    Rational q_power;            // ∏ q_i^{l_i}
    Rational implied_bound;      // N K C2 / ((1 - Cn η) C1)
    bool all_links_hold = false;
};

inline Main1Report evaluate_main1_chain(const FiniteMatrixGroup& G, const matgroup::Subset& G1,
                                        const matgroup::LpFiltrationCertificate& cert, const Rational& eta,
                                        std::size_t N, const Main1Constants& k) {
    if (!cert.accepted) throw precondition_violation("filtration certificate was rejected: " + cert.failed_clause);
    Main1Report r;
    if (cert.factors.empty()) {
        r.skipped = true;
        return r;
    }
    if (eta * k.Cn >= 1) throw precondition_violation("eta must be below 1/C_n");
    const Rational one_minus = 1 - k.Cn * eta;
    const Rational NN(static_cast<long long>(N));
    Rational prod_order = 1, prod_M = 1, prod_ratio = 1;
    r.q_power = 1;
    for (const auto& f : cert.factors) {
        const auto spec = make_spec(f.family == "PSL" ? Family::SL : Family::Sp, f.degree, static_cast<std::uint32_t>(f.q));
        const auto Gi = make_group(spec);
        const Rational oi(spec.order);
        prod_order *= oi;
        prod_M *= Rational(static_cast<long long>(matgroup::charpoly_histogram(Gi).max_count()));
        const Rational ql(arith::ipow(Int(f.q), spec.rank));
        prod_ratio *= oi / ql;
        r.q_power *= ql;
    }
    const auto G1g = matgroup::as_group(G, G1);
    const auto h1 = matgroup::charpoly_histogram(G1g);
    const auto c1 = matgroup::check_C_property(G1g, h1, k.Cn * eta, N);
    const Rational order1(static_cast<long long>(G1g.order()));
    const Rational H(static_cast<long long>(c1.witness_size));
    const Rational M1(static_cast<long long>(h1.max_count()));
    auto link = [&](std::string name, Rational lhs, Rational rhs) {
        r.links.push_back({std::move(name), lhs, rhs, lhs <= rhs});
    };
    link("(1-C(n)eta) C1 prod|G_i| <= (1-C(n)eta)|G1|", one_minus * k.C1 * prod_order, one_minus * order1);
    link("(1-C(n)eta)|G1| <= |H|", one_minus * order1, H);
    link("|H| <= N M_G1", H, NN * M1);
    link("N M_G1 <= N C2 prod M_Gi", NN * M1, NN * k.C2 * prod_M);
    link("N C2 prod M_Gi <= N K C2 prod |G_i|/q^l_i", NN * k.C2 * prod_M, NN * k.K * k.C2 * prod_ratio);
    r.implied_bound = NN * k.K * k.C2 / (one_minus * k.C1);
    r.all_links_hold = std::all_of(r.links.begin(), r.links.end(), [](const ChainLink& l) { return l.holds; });
    return r;
}

}  // namespace artin::chevalley
