#pragma once

/**
 * @file modules.hpp
 * @brief The natural module F_q^n of a matrix group: semisimplicity by spinning,
 *        centralizer fields and rewriting over F_{q^r}, and Clifford decomposition.
 */

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "artin/arith/finite_field.hpp"
#include "artin/matgroup/group.hpp"

namespace artin::matgroup {

using arith::Fq;
using arith::FqPoly;

using DenseMat = std::vector<Vec>;  // row-major rows

inline DenseMat to_dense(const MatFq& g) {
    DenseMat m(g.n, Vec(g.n));
    for (unsigned i = 0; i < g.n; ++i)
        for (unsigned j = 0; j < g.n; ++j) m[i][j] = g.at(i, j);
    return m;
}

inline MatFq from_dense(const DenseMat& m) {
    MatFq g;
    g.n = static_cast<std::uint8_t>(m.size());
    for (unsigned i = 0; i < g.n; ++i)
        for (unsigned j = 0; j < g.n; ++j) g.set(i, j, m[i][j]);
    return g;
}

/// Basis of {X (d2×d1) : X·A_k = B_k·X for all k}; A_k are d1×d1 and B_k are d2×d2.
inline std::vector<DenseMat> intertwiners(const FiniteField& F, const std::vector<DenseMat>& A,
                                          const std::vector<DenseMat>& B, unsigned d1, unsigned d2) {
    const unsigned unknowns = d1 * d2;
    std::vector<Vec> rows;
    for (std::size_t k = 0; k < A.size(); ++k)
        for (unsigned i = 0; i < d2; ++i)
            for (unsigned j = 0; j < d1; ++j) {
                Vec row(unknowns, 0);
                // (X A)_{ij} = Σ_l x_{il} A_{lj}
                for (unsigned l = 0; l < d1; ++l) row[i * d1 + l] = F.add(row[i * d1 + l], A[k][l][j]);
                // (B X)_{ij} = Σ_l B_{il} x_{lj}
                for (unsigned l = 0; l < d2; ++l) row[l * d1 + j] = F.sub(row[l * d1 + j], B[k][i][l]);
                rows.push_back(std::move(row));
            }
    std::vector<DenseMat> out;
    if (rows.empty()) {
        // no constraints: every matrix intertwines
        for (unsigned u = 0; u < unknowns; ++u) {
            DenseMat X(d2, Vec(d1, 0));
            X[u / d1][u % d1] = 1;
            out.push_back(std::move(X));
        }
        return out;
    }
    for (const auto& sol : nullspace(F, rows, unknowns)) {
        DenseMat X(d2, Vec(d1, 0));
        for (unsigned u = 0; u < unknowns; ++u) X[u / d1][u % d1] = sol[u];
        out.push_back(std::move(X));
    }
    return out;
}

/// Every projective point of F_q^n: nonzero vectors whose first nonzero coordinate is 1.
template <class Fn>
void for_each_projective_point(const FiniteField& F, unsigned n, Fn&& fn) {
    const std::uint32_t q = F.q();
    for (unsigned lead = 0; lead < n; ++lead) {
        const unsigned tail = n - lead - 1;
        std::uint64_t total = 1;
        for (unsigned i = 0; i < tail; ++i) total *= q;
        for (std::uint64_t code = 0; code < total; ++code) {
            Vec v(n, 0);
            v[lead] = 1;
            std::uint64_t c = code;
            for (unsigned i = lead + 1; i < n; ++i) {
                v[i] = static_cast<elem>(c % q);
                c /= q;
            }
            if (!fn(v)) return;
        }
    }
}

inline bool subspace_contains(const FiniteField& F, const Subspace& big, const Subspace& small) {
    for (const auto& v : small.basis)
        if (!contains(F, big, v)) return false;
    return true;
}

/// Irreducible submodules: the minimal members among all cyclic submodules, sorted.
inline std::vector<Subspace> minimal_submodules(const FiniteField& F, unsigned n, const std::vector<MatFq>& gens) {
    std::set<Subspace> cyclic;
    for_each_projective_point(F, n, [&](const Vec& v) {
        cyclic.insert(spin(F, gens, v));
        return true;
    });
    std::vector<Subspace> all(cyclic.begin(), cyclic.end());  // ordered by dimension
    std::vector<Subspace> minimal;
    for (const auto& S : all) {
        bool is_min = true;
        for (const auto& T : minimal) {
            if (T.dim() >= S.dim()) break;
            if (subspace_contains(F, S, T)) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(S);
    }
    // the scan above only compares against minimal ones; a non-minimal smaller
    // cyclic module always contains a minimal one, so this suffices
    return minimal;
}

inline bool is_irreducible(const FiniteField& F, unsigned n, const std::vector<MatFq>& gens) {
    bool irreducible = true;
    for_each_projective_point(F, n, [&](const Vec& v) {
        if (spin(F, gens, v).dim() < n) irreducible = false;
        return irreducible;
    });
    return irreducible;
}

struct SemisimpleResult {
    bool semisimple = false;
    bool coprime_order = false;  // Maschke applies
    std::vector<Subspace> decomposition;
    unsigned socle_dim = 0;
};

/// Semisimplicity of the natural module; the decomposition is V = ⊕ W_i when semisimple.
inline SemisimpleResult is_semisimple(const FiniteMatrixGroup& G) {
    const FiniteField& F = G.field();
    const unsigned n = G.n();
    SemisimpleResult r;
    r.coprime_order = G.order() % F.p() != 0;
    std::vector<MatFq> gens = G.generators();
    if (gens.empty()) gens.push_back(identity(n));
    const auto minimal = minimal_submodules(F, n, gens);
    Subspace W;
    W.n = n;
    for (const auto& S : minimal) {
        Subspace next = sum(F, W, S);
        if (next.dim() == W.dim() + S.dim()) {
            W = std::move(next);
            r.decomposition.push_back(S);
        }
    }
    r.socle_dim = W.dim();
    r.semisimple = r.coprime_order || W.dim() == n;
    if (r.coprime_order && W.dim() != n)
        throw verification_failure("coprime-order group failed to decompose into irreducibles");
    if (!r.semisimple) r.decomposition.clear();
    return r;
}

// ---------------------------------------------------------------------------
// Centralizer field and rewriting over F_{q^r}.

struct WedderburnData {
    unsigned r = 0;
    unsigned m = 0;
    std::vector<MatFq> centralizer_basis;  // over F_q
    MatFq primitive;                       // α with Z = F_q[α]
    std::vector<elem> primitive_minpoly;   // monic, low-to-high, over F_q
    arith::FieldPtr extension;             // F_{q^r}
    elem prime_image = 0;                  // image of the generator of F_q inside F_{q^r}
    elem alpha_image = 0;                  // image γ of α
    std::vector<Vec> basis;                // α^t e_j, j major
    std::vector<MatFq> rewritten;          // g' for every g, aligned with G.elements()
    FiniteMatrixGroup rewritten_group;     // G' ⊂ GL_m(F_{q^r})
    bool identity_holds = false;           // f_g = ∏_σ f_{g'}^σ for all g
    bool absolutely_irreducible = false;   // centralizer of G' is the scalars
};

namespace detail {

inline std::vector<MatFq> centralizer(const FiniteField& F, unsigned n, const std::vector<MatFq>& gens) {
    std::vector<DenseMat> A;
    for (const auto& g : gens) A.push_back(to_dense(g));
    std::vector<MatFq> out;
    for (const auto& X : intertwiners(F, A, A, n, n)) out.push_back(from_dense(X));
    return out;
}

inline Vec flatten(const MatFq& x) {
    return Vec(x.a.begin(), x.a.begin() + static_cast<long>(x.n) * x.n);
}

/// Monic minimal polynomial of x over F_q, low-to-high.
inline std::vector<elem> minimal_polynomial(const FiniteField& F, const MatFq& x) {
    const unsigned n = x.n;
    std::vector<Vec> powers{flatten(identity(n))};
    Subspace S;
    S.n = n * n;
    insert(F, S, powers[0]);
    MatFq cur = identity(n);
    while (true) {
        cur = mul(F, cur, x);
        Vec v = flatten(cur);
        if (contains(F, S, v)) {
            const auto c = coordinates(F, powers, v);
            std::vector<elem> mu;
            for (auto ci : c) mu.push_back(F.neg(ci));
            mu.push_back(1);
            return mu;
        }
        insert(F, S, v);
        powers.push_back(std::move(v));
    }
}

/// Smallest root (by encoding) of an F_p-polynomial given by integer coefficients, inside E.
inline elem embed_root(const FiniteField& E, const std::vector<std::uint32_t>& coeffs) {
    std::vector<long long> c(coeffs.begin(), coeffs.end());
    const auto roots = arith::roots_by_search(E, arith::make_fq_poly(E, c));
    if (roots.empty()) throw verification_failure("subfield embedding not found");
    return roots.front();
}

}  // namespace detail

/// Field embedding F_q → F_{q^r} determined by sending F_q's generator to `beta`.
inline elem embed_element(const FiniteField& Fq_, const FiniteField& E, elem beta, elem a) {
    if (Fq_.k() == 1) return a;  // prime field codes coincide
    const auto d = Fq_.digits(a);
    elem acc = 0, pw = 1;
    for (auto di : d) {
        acc = E.add(acc, E.mul(E.from_int(di), pw));
        pw = E.mul(pw, beta);
    }
    return acc;
}

/// Reversed characteristic polynomial of g' over E, its Galois orbit product, and the comparison with f_g.
inline bool galois_norm_identity(const FiniteField& F, const FiniteField& E, elem beta, unsigned r, const MatFq& g,
                                 const MatFq& gp) {
    const auto fg = rev_charpoly(F, g);
    const auto fgp = rev_charpoly(E, gp);
    std::vector<Fq> base;
    for (auto c : fgp) base.push_back({&E, c});
    FqPoly prod({Fq{&E, 1}});
    for (unsigned i = 0; i < r; ++i) {
        std::vector<Fq> conj;
        std::uint64_t e = 1;
        for (unsigned t = 0; t < i; ++t) e *= F.q();
        for (const auto& c : base) conj.push_back({&E, E.pow(c.v, static_cast<long long>(e))});
        prod = prod * FqPoly(conj);
    }
    std::vector<Fq> target;
    for (auto c : fg) target.push_back({&E, embed_element(F, E, beta, c)});
    return prod == FqPoly(target);
}

inline WedderburnData wedderburn_rewrite(const FiniteMatrixGroup& G) {
    const FiniteField& F = G.field();
    const unsigned n = G.n();
    std::vector<MatFq> gens = G.generators();
    if (gens.empty()) gens.push_back(identity(n));
    if (!is_irreducible(F, n, gens)) throw not_irreducible("group does not act irreducibly");
    WedderburnData w;
    w.centralizer_basis = detail::centralizer(F, n, gens);
    w.r = static_cast<unsigned>(w.centralizer_basis.size());
    if (n % w.r != 0) throw verification_failure("centralizer dimension does not divide n");
    w.m = n / w.r;
    for (const auto& x : w.centralizer_basis)
        for (const auto& y : w.centralizer_basis)
            if (!(mul(F, x, y) == mul(F, y, x))) throw verification_failure("centralizer is not commutative");

    // primitive element: first combination of the basis whose minimal polynomial is irreducible of degree r
    std::uint64_t total = 1;
    for (unsigned i = 0; i < w.r; ++i) total *= F.q();
    bool found = false;
    for (std::uint64_t code = 1; code < total && !found; ++code) {
        MatFq x;
        x.n = static_cast<std::uint8_t>(n);
        std::uint64_t c = code;
        for (unsigned i = 0; i < w.r; ++i) {
            x = add(F, x, scale(F, w.centralizer_basis[i], static_cast<elem>(c % F.q())));
            c /= F.q();
        }
        const auto mu = detail::minimal_polynomial(F, x);
        if (mu.size() != w.r + 1) continue;
        const auto fac = arith::factor_trial(F, arith::make_fq_poly_raw(F, mu));
        if (fac.size() != 1 || fac[0].second != 1) continue;
        w.primitive = x;
        w.primitive_minpoly = mu;
        found = true;
    }
    if (!found) throw verification_failure("centralizer is not a field");

    std::uint64_t qr = total;
    if (qr >= (1u << 16)) throw unsupported("centralizer field F_" + std::to_string(qr) + " too large");
    w.extension = FiniteField::make(static_cast<std::uint32_t>(qr));
    const FiniteField& E = *w.extension;
    w.prime_image = F.k() == 1 ? 0 : detail::embed_root(E, F.modulus());
    {
        std::vector<Fq> mu_e;
        for (auto c : w.primitive_minpoly) mu_e.push_back({&E, embed_element(F, E, w.prime_image, c)});
        const auto roots = arith::roots_by_search(E, FqPoly(mu_e));
        if (roots.empty()) throw verification_failure("minimal polynomial has no root in the extension");
        w.alpha_image = roots.front();
    }

    // E-basis e_1..e_m chosen among standard vectors; F_q-basis α^t e_j
    std::vector<MatFq> alpha_pows{identity(n)};
    for (unsigned t = 1; t < w.r; ++t) alpha_pows.push_back(mul(F, alpha_pows.back(), w.primitive));
    Subspace spanned;
    spanned.n = n;
    for (unsigned i = 0; i < n && w.basis.size() < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        if (contains(F, spanned, e)) continue;
        for (unsigned t = 0; t < w.r; ++t) {
            Vec v = apply(F, alpha_pows[t], e);
            insert(F, spanned, v);
            w.basis.push_back(std::move(v));
        }
    }
    if (w.basis.size() != n) throw verification_failure("could not build a basis over the centralizer field");

    std::vector<elem> gamma_pows{1};
    for (unsigned t = 1; t < w.r; ++t) gamma_pows.push_back(E.mul(gamma_pows.back(), w.alpha_image));
    auto rewrite = [&](const MatFq& g) {
        MatFq gp;
        gp.n = static_cast<std::uint8_t>(w.m);
        for (unsigned j = 0; j < w.m; ++j) {
            const Vec img = apply(F, g, w.basis[j * w.r]);
            const auto c = coordinates(F, w.basis, img);
            if (c.empty()) throw verification_failure("image outside the rewritten basis");
            for (unsigned k = 0; k < w.m; ++k) {
                elem entry = 0;
                for (unsigned t = 0; t < w.r; ++t)
                    entry = E.add(entry, E.mul(embed_element(F, E, w.prime_image, c[k * w.r + t]), gamma_pows[t]));
                gp.set(k, j, entry);
            }
        }
        return gp;
    };

    w.identity_holds = true;
    for (const auto& g : G.elements()) {
        MatFq gp = rewrite(g);
        if (!galois_norm_identity(F, E, w.prime_image, w.r, g, gp)) w.identity_holds = false;
        w.rewritten.push_back(gp);
    }
    std::vector<MatFq> gp_gens;
    for (const auto& g : gens) gp_gens.push_back(rewrite(g));
    std::vector<MatFq> images = w.rewritten;
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    if (images.size() != G.order()) throw verification_failure("rewriting is not injective");
    w.rewritten_group = FiniteMatrixGroup::from_elements(w.extension, w.m, std::move(images), gp_gens);
    for (std::size_t i = 0; i < G.order() && w.identity_holds; ++i)
        for (const auto& g : gens) {
            // homomorphism spot check against the generators
            const MatFq prod = mul(F, G.element(i), g);
            if (!(rewrite(prod) == mul(E, w.rewritten[i], rewrite(g)))) {
                w.identity_holds = false;
                break;
            }
        }
    w.absolutely_irreducible = detail::centralizer(E, w.m, gp_gens).size() == 1;
    return w;
}

/// Restriction of scalars from F_{p^k} to F_p: each entry a becomes the k×k matrix of multiplication by a.
inline FiniteMatrixGroup restrict_scalars(const FiniteMatrixGroup& G) {
    const FiniteField& E = G.field();
    const unsigned k = E.k(), m = G.n(), n = m * k;
    if (n > max_dim) throw unsupported("restricted degree exceeds 6");
    auto P = FiniteField::make(E.p());
    auto expand = [&](const MatFq& g) {
        MatFq h;
        h.n = static_cast<std::uint8_t>(n);
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j) {
                elem xpow = 1;
                for (unsigned c = 0; c < k; ++c) {
                    const auto d = E.digits(E.mul(g.at(i, j), xpow));
                    for (unsigned rr = 0; rr < k; ++rr) h.set(i * k + rr, j * k + c, d[rr]);
                    xpow = E.mul(xpow, k == 1 ? 1 : E.p());
                }
            }
        return h;
    };
    std::vector<MatFq> gens;
    for (const auto& g : G.generators()) gens.push_back(expand(g));
    return FiniteMatrixGroup::close(P, n, gens);
}

// ---------------------------------------------------------------------------
// Clifford decomposition.

struct CliffordResult {
    std::vector<Subspace> components;
    std::vector<std::vector<std::size_t>> generator_action;  // component index permutation per generator of G
    bool permuted_by_G = false;
};

inline DenseMat restricted_action(const FiniteField& F, const MatFq& g, const Subspace& W) {
    const unsigned d = W.dim();
    DenseMat A(d, Vec(d, 0));
    for (unsigned j = 0; j < d; ++j) {
        const auto c = coordinates(F, W.basis, apply(F, g, W.basis[j]));
        if (c.empty()) throw verification_failure("subspace is not invariant");
        for (unsigned i = 0; i < d; ++i) A[i][j] = c[i];
    }
    return A;
}

inline bool isomorphic_modules(const FiniteField& F, const std::vector<MatFq>& gens, const Subspace& W1,
                               const Subspace& W2) {
    if (W1.dim() != W2.dim()) return false;
    std::vector<DenseMat> A, B;
    for (const auto& g : gens) {
        A.push_back(restricted_action(F, g, W1));
        B.push_back(restricted_action(F, g, W2));
    }
    return !intertwiners(F, A, B, W1.dim(), W2.dim()).empty();
}

inline CliffordResult clifford_decompose(const FiniteMatrixGroup& G, const Subset& K) {
    if (!is_subgroup(G, K) || !is_normal(G, K)) throw invalid_input("K is not a normal subgroup of G");
    const FiniteField& F = G.field();
    const unsigned n = G.n();
    std::vector<MatFq> kgens;
    for (auto i : subgroup_generators(G, K)) kgens.push_back(G.element(i));
    if (kgens.empty()) kgens.push_back(identity(n));
    const auto minimal = minimal_submodules(F, n, kgens);
    std::vector<Subspace> reps;
    CliffordResult r;
    for (const auto& W : minimal) {
        std::size_t cls = reps.size();
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (isomorphic_modules(F, kgens, reps[c], W)) {
                cls = c;
                break;
            }
        if (cls == reps.size()) {
            reps.push_back(W);
            r.components.push_back(W);
        } else {
            r.components[cls] = sum(F, r.components[cls], W);
        }
    }
    unsigned total = 0;
    for (const auto& c : r.components) total += c.dim();
    if (total != n) throw precondition_violation("V is not semisimple as a K-module");
    r.permuted_by_G = true;
    for (const auto& g : G.generators()) {
        std::vector<std::size_t> perm;
        for (const auto& U : r.components) {
            std::vector<Vec> imgs;
            for (const auto& v : U.basis) imgs.push_back(apply(F, g, v));
            const Subspace gU = span(F, n, imgs);
            std::size_t target = r.components.size();
            for (std::size_t c = 0; c < r.components.size(); ++c)
                if (r.components[c] == gU) target = c;
            if (target == r.components.size()) r.permuted_by_G = false;
            perm.push_back(target);
        }
        r.generator_action.push_back(std::move(perm));
    }
    return r;
}

}  // namespace artin::matgroup
