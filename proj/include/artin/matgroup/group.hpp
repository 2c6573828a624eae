#pragma once

/**
 * @file group.hpp
 * @brief Finite subgroups of GL_n(F_q) by generators, enumerated exhaustively.
 *
 * Elements are kept sorted lexicographically on their row-major entries, so
 * element indices, class lists and subgroup bitsets are reproducible.
 * Subgroups of an enumerated group are index bitsets into its element list.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/arith/finite_field.hpp"
#include "artin/matgroup/matrix_fq.hpp"

namespace artin::matgroup {

using arith::FieldPtr;

inline constexpr std::size_t default_cap = 200000;

using Subset = std::vector<bool>;

class FiniteMatrixGroup {
public:
    FiniteMatrixGroup() = default;

    /// Breadth-first closure of the generators.
    static FiniteMatrixGroup close(FieldPtr F, unsigned n, std::vector<MatFq> gens, std::size_t cap = default_cap) {
        if (!F) throw invalid_input("group without a field");
        for (const auto& g : gens) {
            if (g.n != n) throw invalid_input("generator size does not match the group degree");
            MatFq inv;
            if (!try_inverse(*F, g, inv)) throw invalid_input("singular generator");
        }
        FiniteMatrixGroup G;
        G.F_ = std::move(F);
        G.n_ = n;
        G.gens_ = std::move(gens);
        const FiniteField& K = *G.F_;
        std::unordered_map<MatFq, std::uint32_t, MatFqHash> seen;
        std::vector<MatFq> elems{identity(n)};
        seen.emplace(elems[0], 0);
        for (std::size_t head = 0; head < elems.size(); ++head) {
            for (const auto& g : G.gens_) {
                MatFq x = mul(K, elems[head], g);
                if (seen.count(x)) continue;
                if (elems.size() >= cap)
                    throw enumeration_overflow("group closure exceeded cap of " + std::to_string(cap) + " elements");
                seen.emplace(x, static_cast<std::uint32_t>(elems.size()));
                elems.push_back(x);
            }
        }
        G.finish(std::move(elems));
        return G;
    }

    /// Group from an explicit, already closed element list.
    static FiniteMatrixGroup from_elements(FieldPtr F, unsigned n, std::vector<MatFq> elems, std::vector<MatFq> gens) {
        FiniteMatrixGroup G;
        G.F_ = std::move(F);
        G.n_ = n;
        G.gens_ = std::move(gens);
        G.finish(std::move(elems));
        return G;
    }

    const FiniteField& field() const { return *F_; }
    const FieldPtr& field_ptr() const { return F_; }
    unsigned n() const { return n_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<MatFq>& elements() const { return elems_; }
    const MatFq& element(std::size_t i) const { return elems_[i]; }
    const std::vector<MatFq>& generators() const { return gens_; }
    std::size_t identity_index() const { return id_; }

    /// Index of x, or npos when x is not in the group.
    std::size_t index_of(const MatFq& x) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
        if (it == elems_.end() || !(*it == x)) return npos;
        return static_cast<std::size_t>(it - elems_.begin());
    }
    bool contains(const MatFq& x) const { return index_of(x) != npos; }

    std::size_t product(std::size_t i, std::size_t j) const { return index_of(mul(*F_, elems_[i], elems_[j])); }
    std::size_t inverse_index(std::size_t i) const { return index_of(matgroup::inverse(*F_, elems_[i])); }

    std::vector<std::size_t> generator_indices() const {
        std::vector<std::size_t> out;
        for (const auto& g : gens_) out.push_back(index_of(g));
        return out;
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    std::vector<std::vector<std::uint32_t>> conjugacy_classes() const {
        std::vector<MatFq> ginv;
        for (const auto& g : gens_) ginv.push_back(matgroup::inverse(*F_, g));
        std::vector<bool> done(order(), false);
        std::vector<std::vector<std::uint32_t>> classes;
        for (std::size_t i = 0; i < order(); ++i) {
            if (done[i]) continue;
            std::vector<std::uint32_t> cls{static_cast<std::uint32_t>(i)};
            done[i] = true;
            for (std::size_t h = 0; h < cls.size(); ++h) {
                for (std::size_t k = 0; k < gens_.size(); ++k) {
                    const MatFq y = mul(*F_, mul(*F_, gens_[k], elems_[cls[h]]), ginv[k]);
                    const std::size_t j = index_of(y);
                    if (!done[j]) {
                        done[j] = true;
                        cls.push_back(static_cast<std::uint32_t>(j));
                    }
                }
            }
            std::sort(cls.begin(), cls.end());
            classes.push_back(std::move(cls));
        }
        return classes;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    void finish(std::vector<MatFq> elems) {
        std::sort(elems.begin(), elems.end());
        elems_ = std::move(elems);
        id_ = index_of(identity(n_));
        if (id_ == npos) throw invalid_input("element list does not contain the identity");
    }

    FieldPtr F_;
    unsigned n_ = 0;
    std::vector<MatFq> gens_;
    std::vector<MatFq> elems_;
    std::size_t id_ = 0;
};

// ---------------------------------------------------------------------------
// Subgroups as index bitsets.

inline std::size_t count(const Subset& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

inline Subset singleton_identity(const FiniteMatrixGroup& G) {
    Subset s(G.order(), false);
    s[G.identity_index()] = true;
    return s;
}

inline Subset whole(const FiniteMatrixGroup& G) { return Subset(G.order(), true); }

/// Subgroup generated by `base` (already a subgroup) together with extra elements.
inline Subset generate(const FiniteMatrixGroup& G, const Subset& base, const std::vector<std::size_t>& extra) {
    std::vector<std::size_t> gens;
    Subset s = base;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) members.push_back(i);
    if (members.empty()) {
        s[G.identity_index()] = true;
        members.push_back(G.identity_index());
    }
    for (std::size_t e : extra) {
        if (s[e]) continue;
        gens.push_back(e);
        // closure under right multiplication by all generators so far, plus base members
        std::vector<std::size_t> mult = gens;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (base[i]) mult.push_back(i);
        std::vector<std::size_t> queue = members;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            for (std::size_t g : mult) {
                const std::size_t y = G.product(queue[h], g);
                if (!s[y]) {
                    s[y] = true;
                    queue.push_back(y);
                }
            }
        }
        members = std::move(queue);
    }
    return s;
}

inline Subset generate(const FiniteMatrixGroup& G, const std::vector<std::size_t>& gens) {
    return generate(G, singleton_identity(G), gens);
}

/// Subgroup of G generated by explicit matrices; they must lie in G.
inline Subset subgroup_from_matrices(const FiniteMatrixGroup& G, const std::vector<MatFq>& gens) {
    std::vector<std::size_t> idx;
    for (const auto& g : gens) {
        const std::size_t i = G.index_of(g);
        if (i == FiniteMatrixGroup::npos) throw invalid_input("subgroup generator is not an element of the group");
        idx.push_back(i);
    }
    return generate(G, idx);
}

inline bool is_subgroup(const FiniteMatrixGroup& G, const Subset& s) {
    if (!s[G.identity_index()]) return false;
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) m.push_back(i);
    for (std::size_t a : m)
        for (std::size_t b : m)
            if (!s[G.product(a, b)]) return false;
    return true;
}

/// Normality of a subgroup S in the subgroup T ⊇ S (whole group when T is empty).
inline bool is_normal(const FiniteMatrixGroup& G, const Subset& S, const std::vector<std::size_t>& conjugators) {
    for (std::size_t g : conjugators) {
        const MatFq gi = inverse(G.field(), G.element(g));
        for (std::size_t i = 0; i < S.size(); ++i) {
            if (!S[i]) continue;
            const MatFq y = mul(G.field(), mul(G.field(), G.element(g), G.element(i)), gi);
            if (!S[G.index_of(y)]) return false;
        }
    }
    return true;
}

inline bool is_normal(const FiniteMatrixGroup& G, const Subset& S) { return is_normal(G, S, G.generator_indices()); }

/// Generators of the subgroup T, chosen greedily in index order.
inline std::vector<std::size_t> subgroup_generators(const FiniteMatrixGroup& G, const Subset& T) {
    std::vector<std::size_t> gens;
    Subset cur = singleton_identity(G);
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (!T[i] || cur[i]) continue;
        gens.push_back(i);
        cur = generate(G, cur, {i});
    }
    return gens;
}

/// Conjugacy classes of T (under conjugation by T) restricted to the members of T.
inline std::vector<std::vector<std::size_t>> classes_within(const FiniteMatrixGroup& G, const Subset& T,
                                                            const std::vector<std::size_t>& conjugators) {
    std::vector<MatFq> inv;
    for (auto g : conjugators) inv.push_back(inverse(G.field(), G.element(g)));
    std::vector<bool> done(G.order(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < G.order(); ++i) {
        if (!T[i] || done[i]) continue;
        std::vector<std::size_t> cls{i};
        done[i] = true;
        for (std::size_t h = 0; h < cls.size(); ++h)
            for (std::size_t k = 0; k < conjugators.size(); ++k) {
                const MatFq y = mul(G.field(), mul(G.field(), G.element(conjugators[k]), G.element(cls[h])), inv[k]);
                const std::size_t j = G.index_of(y);
                if (!done[j]) {
                    done[j] = true;
                    cls.push_back(j);
                }
            }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

/// All normal subgroups of T that contain `floor`, by unions of T-classes.
/// Sorted by order, then by membership pattern.
inline std::vector<Subset> normal_subgroups_between(const FiniteMatrixGroup& G, const Subset& T, const Subset& floor) {
    const auto tgens = subgroup_generators(G, T);
    const auto classes = classes_within(G, T, tgens);
    std::vector<Subset> found{floor};
    for (std::size_t h = 0; h < found.size(); ++h) {
        for (const auto& cls : classes) {
            if (found[h][cls[0]]) continue;
            Subset next = generate(G, found[h], cls);
            if (std::find(found.begin(), found.end(), next) == found.end()) found.push_back(std::move(next));
        }
    }
    std::sort(found.begin(), found.end(), [](const Subset& a, const Subset& b) {
        const auto ca = count(a), cb = count(b);
        if (ca != cb) return ca < cb;
        return a > b;
    });
    return found;
}

inline std::vector<Subset> normal_subgroups(const FiniteMatrixGroup& G) {
    return normal_subgroups_between(G, whole(G), singleton_identity(G));
}

/// Commutator subgroup [A, B] for subgroups A, B.
inline Subset commutator(const FiniteMatrixGroup& G, const Subset& A, const Subset& B) {
    const auto ga = subgroup_generators(G, A);
    const auto gb = subgroup_generators(G, B);
    std::vector<std::size_t> comms;
    // normal closure in <A,B> of generator commutators is the full commutator subgroup
    for (auto a : ga)
        for (auto b : gb) {
            const std::size_t ai = G.inverse_index(a), bi = G.inverse_index(b);
            comms.push_back(G.product(G.product(ai, bi), G.product(a, b)));
        }
    Subset S = generate(G, comms);
    std::vector<std::size_t> conj = ga;
    conj.insert(conj.end(), gb.begin(), gb.end());
    while (true) {
        std::vector<std::size_t> extra;
        for (std::size_t g : conj) {
            const std::size_t gi = G.inverse_index(g);
            for (std::size_t i = 0; i < S.size(); ++i)
                if (S[i]) {
                    const std::size_t y = G.product(G.product(g, i), gi);
                    if (!S[y]) extra.push_back(y);
                }
        }
        if (extra.empty()) return S;
        S = generate(G, S, extra);
    }
}

inline bool is_abelian(const FiniteMatrixGroup& G, const Subset& S) {
    const auto gens = subgroup_generators(G, S);
    for (auto a : gens)
        for (auto b : gens)
            if (G.product(a, b) != G.product(b, a)) return false;
    return true;
}

inline bool is_solvable(const FiniteMatrixGroup& G) {
    Subset cur = whole(G);
    while (true) {
        if (count(cur) == 1) return true;
        Subset next = commutator(G, cur, cur);
        if (next == cur) return false;
        cur = std::move(next);
    }
}

/// p-part check: order is a power of p (including 1).
inline bool is_p_power(std::uint64_t order, std::uint64_t p) {
    while (order % p == 0) order /= p;
    return order == 1;
}

/// The subgroup T as a standalone group.
inline FiniteMatrixGroup as_group(const FiniteMatrixGroup& G, const Subset& T) {
    std::vector<MatFq> elems, gens;
    for (std::size_t i = 0; i < T.size(); ++i)
        if (T[i]) elems.push_back(G.element(i));
    for (auto i : subgroup_generators(G, T)) gens.push_back(G.element(i));
    return FiniteMatrixGroup::from_elements(G.field_ptr(), G.n(), std::move(elems), std::move(gens));
}

/// Largest normal p-subgroup O_p(G).
inline Subset largest_normal_p_subgroup(const FiniteMatrixGroup& G) {
    Subset best = singleton_identity(G);
    for (const auto& N : normal_subgroups(G))
        if (is_p_power(count(N), G.field().p()) && count(N) > count(best)) best = N;
    return best;
}

}  // namespace artin::matgroup
