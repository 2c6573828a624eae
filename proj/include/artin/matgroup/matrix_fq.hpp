#pragma once

/**
 * @file matrix_fq.hpp
 * @brief Small square matrices over F_q (n <= 6) and linear algebra on F_q^n.
 */

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "artin/arith/finite_field.hpp"
#include "artin/errors.hpp"

namespace artin::matgroup {

using arith::FiniteField;
using elem = FiniteField::elem;

inline constexpr unsigned max_dim = 6;

/// n×n matrix with entries stored row-major in a fixed 36-slot array; unused slots are zero.
struct MatFq {
    std::uint8_t n = 0;
    std::array<std::uint16_t, max_dim * max_dim> a{};

    elem at(unsigned i, unsigned j) const { return a[i * n + j]; }
    void set(unsigned i, unsigned j, elem v) { a[i * n + j] = static_cast<std::uint16_t>(v); }

    friend bool operator==(const MatFq& x, const MatFq& y) { return x.n == y.n && x.a == y.a; }
    friend bool operator<(const MatFq& x, const MatFq& y) { return x.a < y.a; }
};

struct MatFqHash {
    std::size_t operator()(const MatFq& m) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (unsigned i = 0; i < static_cast<unsigned>(m.n) * m.n; ++i) {
            h ^= m.a[i];
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

inline MatFq identity(unsigned n) {
    MatFq m;
    m.n = static_cast<std::uint8_t>(n);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

inline MatFq scalar(unsigned n, elem s) {
    MatFq m;
    m.n = static_cast<std::uint8_t>(n);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, s);
    return m;
}

/// Builds a matrix from row-major codes; entries are taken as field encodings.
inline MatFq from_rows(const FiniteField& F, unsigned n, const std::vector<long long>& entries) {
    if (n == 0 || n > max_dim) throw unsupported("matrix degree " + std::to_string(n) + " outside 1..6");
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw invalid_input("expected " + std::to_string(n * n) + " matrix entries, got " +
                            std::to_string(entries.size()));
    MatFq m;
    m.n = static_cast<std::uint8_t>(n);
    for (unsigned i = 0; i < n * n; ++i) {
        long long v = entries[i];
        if (F.k() == 1) {
            m.a[i] = static_cast<std::uint16_t>(F.from_int(v));
        } else {
            if (v < 0 || v >= static_cast<long long>(F.q()))
                throw invalid_input("entry " + std::to_string(v) + " is not an element code of " + F.describe());
            m.a[i] = static_cast<std::uint16_t>(v);
        }
    }
    return m;
}

inline MatFq mul(const FiniteField& F, const MatFq& x, const MatFq& y) {
    MatFq r;
    r.n = x.n;
    const unsigned n = x.n;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            elem s = 0;
            for (unsigned k = 0; k < n; ++k) s = F.add(s, F.mul(x.at(i, k), y.at(k, j)));
            r.set(i, j, s);
        }
    return r;
}

inline MatFq add(const FiniteField& F, const MatFq& x, const MatFq& y) {
    MatFq r = x;
    for (unsigned i = 0; i < static_cast<unsigned>(x.n) * x.n; ++i) r.a[i] = static_cast<std::uint16_t>(F.add(x.a[i], y.a[i]));
    return r;
}

inline MatFq sub(const FiniteField& F, const MatFq& x, const MatFq& y) {
    MatFq r = x;
    for (unsigned i = 0; i < static_cast<unsigned>(x.n) * x.n; ++i) r.a[i] = static_cast<std::uint16_t>(F.sub(x.a[i], y.a[i]));
    return r;
}

inline MatFq scale(const FiniteField& F, const MatFq& x, elem s) {
    MatFq r = x;
    for (unsigned i = 0; i < static_cast<unsigned>(x.n) * x.n; ++i) r.a[i] = static_cast<std::uint16_t>(F.mul(x.a[i], s));
    return r;
}

inline MatFq transpose(const MatFq& x) {
    MatFq r = x;
    for (unsigned i = 0; i < x.n; ++i)
        for (unsigned j = 0; j < x.n; ++j) r.set(i, j, x.at(j, i));
    return r;
}

inline MatFq power(const FiniteField& F, MatFq b, std::uint64_t e) {
    MatFq r = identity(b.n);
    while (e) {
        if (e & 1) r = mul(F, r, b);
        b = mul(F, b, b);
        e >>= 1;
    }
    return r;
}

/// Inverse by Gauss-Jordan; returns false when singular.
inline bool try_inverse(const FiniteField& F, const MatFq& x, MatFq& out) {
    const unsigned n = x.n;
    MatFq a = x;
    out = identity(n);
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = col;
        while (piv < n && a.at(piv, col) == 0) ++piv;
        if (piv == n) return false;
        if (piv != col)
            for (unsigned j = 0; j < n; ++j) {
                elem t = a.at(piv, j);
                a.set(piv, j, a.at(col, j));
                a.set(col, j, t);
                t = out.at(piv, j);
                out.set(piv, j, out.at(col, j));
                out.set(col, j, t);
            }
        const elem s = F.inv(a.at(col, col));
        for (unsigned j = 0; j < n; ++j) {
            a.set(col, j, F.mul(a.at(col, j), s));
            out.set(col, j, F.mul(out.at(col, j), s));
        }
        for (unsigned r = 0; r < n; ++r) {
            const elem f = a.at(r, col);
            if (r == col || f == 0) continue;
            for (unsigned j = 0; j < n; ++j) {
                a.set(r, j, F.sub(a.at(r, j), F.mul(f, a.at(col, j))));
                out.set(r, j, F.sub(out.at(r, j), F.mul(f, out.at(col, j))));
            }
        }
    }
    return true;
}

inline MatFq inverse(const FiniteField& F, const MatFq& x) {
    MatFq r;
    if (!try_inverse(F, x, r)) throw invalid_input("singular matrix has no inverse");
    return r;
}

/// det(xI - g) coefficients low-to-high by Berkowitz.
inline std::vector<elem> charpoly(const FiniteField& F, const MatFq& A) {
    const unsigned n = A.n;
    std::vector<elem> v{1, F.neg(A.at(0, 0))};
    std::vector<elem> s, ns, t, nv;
    for (unsigned r = 1; r < n; ++r) {
        t.assign(r + 2, 0);
        t[0] = 1;
        t[1] = F.neg(A.at(r, r));
        s.resize(r);
        for (unsigned i = 0; i < r; ++i) s[i] = A.at(i, r);
        for (unsigned k = 0; k < r; ++k) {
            elem dot = 0;
            for (unsigned j = 0; j < r; ++j) dot = F.add(dot, F.mul(A.at(r, j), s[j]));
            t[k + 2] = F.neg(dot);
            ns.assign(r, 0);
            for (unsigned i = 0; i < r; ++i)
                for (unsigned j = 0; j < r; ++j) ns[i] = F.add(ns[i], F.mul(A.at(i, j), s[j]));
            s.swap(ns);
        }
        nv.assign(r + 2, 0);
        for (unsigned i = 0; i < r + 2; ++i)
            for (unsigned j = 0; j <= i && j < v.size(); ++j) nv[i] = F.add(nv[i], F.mul(t[i - j], v[j]));
        v.swap(nv);
    }
    return std::vector<elem>(v.rbegin(), v.rend());
}

/// det(1 - gT) coefficients low-to-high; constant term 1, length n+1.
inline std::vector<elem> rev_charpoly(const FiniteField& F, const MatFq& A) {
    auto c = charpoly(F, A);
    return std::vector<elem>(c.rbegin(), c.rend());
}

inline elem determinant(const FiniteField& F, const MatFq& A) {
    const auto c = charpoly(F, A);
    return (A.n % 2 == 0) ? c[0] : F.neg(c[0]);
}

/// Unipotent: det(1 - gT) = (1 - T)^n.
inline bool is_unipotent(const FiniteField& F, const MatFq& A) {
    const auto c = rev_charpoly(F, A);
    // (1 - T)^n has coefficients (-1)^k C(n,k)
    std::vector<elem> ref{1};
    for (unsigned i = 0; i < A.n; ++i) {
        std::vector<elem> nr(ref.size() + 1, 0);
        for (std::size_t k = 0; k < ref.size(); ++k) {
            nr[k] = F.add(nr[k], ref[k]);
            nr[k + 1] = F.sub(nr[k + 1], ref[k]);
        }
        ref.swap(nr);
    }
    return c == ref;
}

/// Order of an invertible matrix.
inline std::uint64_t element_order(const FiniteField& F, const MatFq& A) {
    const MatFq I = identity(A.n);
    MatFq x = A;
    std::uint64_t k = 1;
    while (!(x == I)) {
        x = mul(F, x, A);
        ++k;
        if (k > 100000000ULL) throw refinement_failure("element order search exceeded bound");
    }
    return k;
}

inline std::string poly_to_string(const std::vector<elem>& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

// ---------------------------------------------------------------------------
// Vectors and subspaces of F_q^n.

using Vec = std::vector<elem>;

inline Vec apply(const FiniteField& F, const MatFq& g, const Vec& v) {
    Vec r(g.n, 0);
    for (unsigned i = 0; i < g.n; ++i) {
        elem s = 0;
        for (unsigned j = 0; j < g.n; ++j) s = F.add(s, F.mul(g.at(i, j), v[j]));
        r[i] = s;
    }
    return r;
}

/// Subspace kept as a reduced row echelon basis, so equal subspaces compare equal.
struct Subspace {
    unsigned n = 0;
    std::vector<Vec> basis;  // RREF rows
    std::vector<unsigned> pivots;

    unsigned dim() const { return static_cast<unsigned>(basis.size()); }
    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis == b.basis; }
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.basis.size() != b.basis.size()) return a.basis.size() < b.basis.size();
        return a.basis < b.basis;
    }
};

/// Reduces v against an RREF basis; returns the residual.
inline Vec reduce(const FiniteField& F, const Subspace& S, Vec v) {
    for (std::size_t i = 0; i < S.basis.size(); ++i) {
        const elem c = v[S.pivots[i]];
        if (c == 0) continue;
        for (unsigned j = 0; j < S.n; ++j) v[j] = F.sub(v[j], F.mul(c, S.basis[i][j]));
    }
    return v;
}

inline bool contains(const FiniteField& F, const Subspace& S, const Vec& v) {
    const Vec r = reduce(F, S, v);
    for (elem x : r)
        if (x != 0) return false;
    return true;
}

/// Inserts v; returns true when the dimension grew.
inline bool insert(const FiniteField& F, Subspace& S, Vec v) {
    v = reduce(F, S, std::move(v));
    unsigned piv = S.n;
    for (unsigned j = 0; j < S.n; ++j)
        if (v[j] != 0) {
            piv = j;
            break;
        }
    if (piv == S.n) return false;
    const elem s = F.inv(v[piv]);
    for (auto& x : v) x = F.mul(x, s);
    for (auto& row : S.basis) {
        const elem c = row[piv];
        if (c == 0) continue;
        for (unsigned j = 0; j < S.n; ++j) row[j] = F.sub(row[j], F.mul(c, v[j]));
    }
    // keep rows sorted by pivot
    std::size_t pos = 0;
    while (pos < S.pivots.size() && S.pivots[pos] < piv) ++pos;
    S.basis.insert(S.basis.begin() + static_cast<long>(pos), v);
    S.pivots.insert(S.pivots.begin() + static_cast<long>(pos), piv);
    return true;
}

inline Subspace span(const FiniteField& F, unsigned n, const std::vector<Vec>& vs) {
    Subspace S;
    S.n = n;
    for (const auto& v : vs) insert(F, S, v);
    return S;
}

inline Subspace sum(const FiniteField& F, const Subspace& a, const Subspace& b) {
    Subspace S = a;
    for (const auto& v : b.basis) insert(F, S, v);
    return S;
}

/// Smallest subspace containing v and stable under the given matrices.
inline Subspace spin(const FiniteField& F, const std::vector<MatFq>& gens, const Vec& v) {
    Subspace S;
    S.n = static_cast<unsigned>(v.size());
    std::vector<Vec> queue;
    if (insert(F, S, v)) queue.push_back(v);
    while (!queue.empty()) {
        Vec w = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : gens) {
            Vec gw = apply(F, g, w);
            if (insert(F, S, gw)) queue.push_back(std::move(gw));
        }
    }
    return S;
}

/// Null space of the rows×cols matrix given row-major; returns a basis of solutions x with M x = 0.
inline std::vector<Vec> nullspace(const FiniteField& F, std::vector<Vec> M, unsigned cols) {
    std::vector<int> pivot_col_of_row;
    unsigned row = 0;
    std::vector<int> where(cols, -1);
    for (unsigned col = 0; col < cols && row < M.size(); ++col) {
        unsigned piv = row;
        while (piv < M.size() && M[piv][col] == 0) ++piv;
        if (piv == M.size()) continue;
        std::swap(M[piv], M[row]);
        const elem s = F.inv(M[row][col]);
        for (auto& x : M[row]) x = F.mul(x, s);
        for (unsigned r = 0; r < M.size(); ++r) {
            if (r == row || M[r][col] == 0) continue;
            const elem f = M[r][col];
            for (unsigned j = 0; j < cols; ++j) M[r][j] = F.sub(M[r][j], F.mul(f, M[row][j]));
        }
        where[col] = static_cast<int>(row);
        ++row;
    }
    std::vector<Vec> out;
    for (unsigned free = 0; free < cols; ++free) {
        if (where[free] != -1) continue;
        Vec x(cols, 0);
        x[free] = 1;
        for (unsigned col = 0; col < cols; ++col)
            if (where[col] != -1) x[col] = F.neg(M[where[col]][free]);
        out.push_back(std::move(x));
    }
    return out;
}

/// Coordinates of v in the (not necessarily RREF) basis b, or empty when v is outside its span.
inline std::vector<elem> coordinates(const FiniteField& F, const std::vector<Vec>& b, const Vec& v) {
    const unsigned n = static_cast<unsigned>(v.size());
    const unsigned k = static_cast<unsigned>(b.size());
    // columns of the system are the basis vectors plus v
    std::vector<Vec> M(n, Vec(k + 1, 0));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < k; ++j) M[i][j] = b[j][i];
        M[i][k] = F.neg(v[i]);
    }
    for (const auto& sol : nullspace(F, M, k + 1)) {
        if (sol[k] == 0) continue;
        const elem s = F.inv(sol[k]);
        std::vector<elem> c(k);
        for (unsigned j = 0; j < k; ++j) c[j] = F.mul(sol[j], s);
        return c;
    }
    return {};
}

}  // namespace artin::matgroup
