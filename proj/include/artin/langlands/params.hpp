#pragma once

/**
 * @file params.hpp
 * @brief Archimedean sign vectors, GSp_4 conjugacy checks and the exterior
 *        square of automorphic induction from a quadratic field.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "artin/arith/matrix.hpp"
#include "artin/arith/number_field.hpp"
#include "artin/errors.hpp"

namespace artin::langlands {

using arith::AlgebraicNumber;
using arith::FieldRef;
using arith::Matrix;
using arith::Rational;

using SignVector = std::vector<int>;

/// +1's first.
inline SignVector canonical(SignVector s) {
    for (int e : s)
        if (e != 1 && e != -1) throw invalid_input("sign entries must be +1 or -1");
    std::sort(s.begin(), s.end(), [](int a, int b) { return a > b; });
    return s;
}

struct InfinityType {
    std::vector<std::string> characters;  // "1" or "sgn", canonical order
    unsigned plus = 0, minus = 0;
};

inline InfinityType infinity_type(const SignVector& signs) {
    InfinityType t;
    for (int e : canonical(signs)) {
        t.characters.push_back(e == 1 ? "1" : "sgn");
        (e == 1 ? t.plus : t.minus) += 1;
    }
    return t;
}

using QMat = Matrix<Rational>;

inline QMat qmat(std::size_t n, std::initializer_list<Rational> e) { return QMat(n, n, std::vector<Rational>(e)); }

struct Gsp4Check {
    std::string name;
    bool holds = false;
    std::optional<Rational> similitude;
};

/// Form [[0, I2], [-I2, 0]].
inline QMat gsp4_form() { return qmat(4, {0, 0, 1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, 0}); }

/// λ with ᵗA J A = λ J, if any.
inline std::optional<Rational> similitude_factor(const QMat& A) {
    const QMat J = gsp4_form();
    const QMat S = A.transpose() * J * A;
    const Rational lambda = S(0, 2);
    if (S == J * lambda) return lambda;
    return std::nullopt;
}

inline std::vector<Gsp4Check> verify_gsp4_conjugacy() {
    const Rational h(1, 2);
    const QMat P = qmat(4, {1, 0, 1, 0, 0, -1, 0, 1, 1, 0, -1, 0, 0, 1, 0, 1}) * h;
    const QMat swap = qmat(4, {0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 0});
    const QMat target = QMat::diagonal({1, -1, -1, 1}, Rational(0));
    const QMat s2 = qmat(4, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0});
    const QMat d = QMat::diagonal({1, 1, -1, -1}, Rational(0));
    const QMat J = gsp4_form();
    std::vector<Gsp4Check> out;
    out.push_back({"P^-1 [[0,I],[I,0]] P = diag(1,-1,-1,1)", P.inverse(Rational(1)) * swap * P == target, std::nullopt});
    const auto lp = similitude_factor(P);
    out.push_back({"tP J P = -1/2 J", P.transpose() * J * P == J * Rational(-1, 2), lp});
    const auto ls = similitude_factor(s2);
    out.push_back({"s2^-1 diag(1,1,-1,-1) s2 = diag(1,-1,-1,1), s2 symplectic",
                   s2.inverse(Rational(1)) * d * s2 == target && ls && *ls == 1, ls});
    return out;
}

struct LocalParameterPair {
    bool split = true;
    std::vector<AlgebraicNumber> alpha;  // split: (α1, α2); inert: diagonal of g
    std::vector<AlgebraicNumber> beta;   // split only
    std::optional<Matrix<AlgebraicNumber>> g;  // inert: explicit 2x2 g, overrides alpha
};

namespace detail {

inline AlgebraicNumber zero_of(const FieldRef& K) { return AlgebraicNumber::from_rational(K, Rational(0)); }
inline AlgebraicNumber one_of(const FieldRef& K) { return AlgebraicNumber::from_rational(K, Rational(1)); }

inline FieldRef field_of(const LocalParameterPair& pr) {
    if (pr.g) return (*pr.g)(0, 0).field();
    if (pr.alpha.empty()) throw invalid_input("empty parameter pair");
    return pr.alpha[0].field();
}

inline void validate(const LocalParameterPair& pr) {
    if (pr.split) {
        if (pr.alpha.size() != 2 || pr.beta.size() != 2) throw invalid_input("split data needs two 2-tuples");
        for (const auto* v : {&pr.alpha, &pr.beta})
            for (const auto& x : *v)
                if (x.is_zero()) throw invalid_input("parameters must be nonzero");
    } else {
        if (pr.g) {
            if (pr.g->rows() != 2 || pr.g->cols() != 2) throw invalid_input("inert g must be 2x2");
            const auto& G = *pr.g;
            if ((G(0, 0) * G(1, 1) - G(0, 1) * G(1, 0)).is_zero()) throw invalid_input("inert g must be invertible");
        } else {
            if (pr.alpha.size() != 2) throw invalid_input("inert data needs one 2-tuple");
            for (const auto& x : pr.alpha)
                if (x.is_zero()) throw invalid_input("parameters must be nonzero");
        }
    }
}

inline Matrix<AlgebraicNumber> inert_g(const LocalParameterPair& pr) {
    if (pr.g) return *pr.g;
    return Matrix<AlgebraicNumber>::diagonal(pr.alpha, zero_of(pr.alpha[0].field()));
}

}  // namespace detail

/// Image of Frobenius under automorphic induction: diag(α, β) when split, [[0, g], [I, 0]] when inert.
inline Matrix<AlgebraicNumber> induction_matrix(const LocalParameterPair& pr) {
    detail::validate(pr);
    const FieldRef K = detail::field_of(pr);
    const auto z = detail::zero_of(K);
    if (pr.split) return Matrix<AlgebraicNumber>::diagonal({pr.alpha[0], pr.alpha[1], pr.beta[0], pr.beta[1]}, z);
    const auto g = detail::inert_g(pr);
    Matrix<AlgebraicNumber> M(4, 4, z);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) M(i, 2 + j) = g(i, j);
        M(2 + i, i) = detail::one_of(K);
    }
    return M;
}

struct InductionParams {
    std::vector<AlgebraicNumber> multiset;        // split: {α1, α2, β1, β2}, sorted
    std::vector<AlgebraicNumber> reversed_charpoly;  // det(1 - M T), low-to-high
};

inline InductionParams induction_params(const LocalParameterPair& pr) {
    InductionParams out;
    const auto M = induction_matrix(pr);
    if (pr.split) {
        out.multiset = {pr.alpha[0], pr.alpha[1], pr.beta[0], pr.beta[1]};
        std::sort(out.multiset.begin(), out.multiset.end());
    }
    out.reversed_charpoly = arith::reversed_charpoly(M, detail::one_of(detail::field_of(pr)));
    return out;
}

/// Asai image of Frobenius on the basis e_i ⊗ e_j (i major).
inline Matrix<AlgebraicNumber> asai_matrix(const LocalParameterPair& pr) {
    detail::validate(pr);
    const FieldRef K = detail::field_of(pr);
    const auto z = detail::zero_of(K);
    if (pr.split)
        return arith::kron(Matrix<AlgebraicNumber>::diagonal(pr.alpha, z), Matrix<AlgebraicNumber>::diagonal(pr.beta, z));
    // x ⊗ y ↦ g y ⊗ x
    const auto g = detail::inert_g(pr);
    Matrix<AlgebraicNumber> A(4, 4, z);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) A(k * 2 + i, i * 2 + j) = g(k, j);
    return A;
}

/// Ind_K^Q(det): diag(det α, det β) when split, [[0, det g], [1, 0]] when inert.
inline Matrix<AlgebraicNumber> induced_det_matrix(const LocalParameterPair& pr) {
    detail::validate(pr);
    const FieldRef K = detail::field_of(pr);
    const auto z = detail::zero_of(K);
    if (pr.split) return Matrix<AlgebraicNumber>::diagonal({pr.alpha[0] * pr.alpha[1], pr.beta[0] * pr.beta[1]}, z);
    const auto g = detail::inert_g(pr);
    Matrix<AlgebraicNumber> D(2, 2, z);
    D(0, 1) = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    D(1, 0) = detail::one_of(K);
    return D;
}

struct WedgeAsaiResult {
    std::vector<AlgebraicNumber> wedge_side;  // det(1 - ∧²M T)
    std::vector<AlgebraicNumber> sum_side;    // det(1 - (ω_{K/Q} As ⊕ Ind det) T)
    std::vector<AlgebraicNumber> wedge_multiset, sum_multiset;  // split only, sorted
    bool holds = false;
};

/// ∧²(I_K^Q) = (As ⊗ ω_{K/Q}) ⊕ Ind_K^Q(det), optionally twisted by ω(p)^{-1} on both sides.
inline WedgeAsaiResult check_wedge_asai_identity(const LocalParameterPair& pr, int omega_KQ,
                                                 const std::optional<AlgebraicNumber>& omega = std::nullopt) {
    if (omega_KQ != 1 && omega_KQ != -1) throw invalid_input("omega_{K/Q}(p) must be +1 or -1");
    if ((omega_KQ == 1) != pr.split) throw invalid_input("split flag disagrees with omega_{K/Q}(p)");
    detail::validate(pr);
    const FieldRef K = detail::field_of(pr);
    const auto one = detail::one_of(K);
    AlgebraicNumber twist = one;
    if (omega) {
        if (omega->is_zero()) throw invalid_input("central character value must be nonzero");
        twist = omega->inverse();
    }
    const auto W = arith::wedge2(induction_matrix(pr)) * twist;
    const auto S = arith::direct_sum(asai_matrix(pr) * AlgebraicNumber::from_rational(K, Rational(omega_KQ)),
                                     induced_det_matrix(pr)) *
                   twist;
    WedgeAsaiResult r;
    r.wedge_side = arith::reversed_charpoly(W, one);
    r.sum_side = arith::reversed_charpoly(S, one);
    if (pr.split) {
        for (std::size_t i = 0; i < 6; ++i) {
            r.wedge_multiset.push_back(W(i, i));
            r.sum_multiset.push_back(S(i, i));
        }
        std::sort(r.wedge_multiset.begin(), r.wedge_multiset.end());
        std::sort(r.sum_multiset.begin(), r.sum_multiset.end());
    }
    r.holds = r.wedge_side == r.sum_side && r.wedge_multiset == r.sum_multiset;
    return r;
}

}  // namespace artin::langlands
