#pragma once

/**
 * @file satake.hpp
 * @brief Satake parameter systems, Hecke polynomials, exterior-power coefficients,
 *        Galois conjugation, integrality and Rankin–Selberg partial sums.
 *
 * Parameters are never extracted from H_p; everything goes through
 * elementary symmetric functions.
 */

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/arith/analytic.hpp"
#include "artin/arith/number_field.hpp"

namespace artin::satake {

using arith::AlgebraicNumber;
using arith::CertifiedInterval;
using arith::FieldRef;
using arith::Int;
using arith::Rational;

/// e_0..e_n of the given values.
inline std::vector<AlgebraicNumber> elementary_symmetric(const FieldRef& K, const std::vector<AlgebraicNumber>& a) {
    std::vector<AlgebraicNumber> e{AlgebraicNumber::from_rational(K, Rational(1))};
    for (const auto& x : a) {
        e.push_back(AlgebraicNumber::from_rational(K, Rational(0)));
        for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * x;
    }
    return e;
}

class SatakeSystem {
public:
    SatakeSystem(unsigned n, Int N, FieldRef K) : n_(n), N_(std::move(N)), K_(std::move(K)) {
        if (n == 0) throw invalid_input("degree must be positive");
        if (N_ <= 0) throw invalid_input("conductor must be positive");
    }

    unsigned n() const { return n_; }
    const Int& conductor() const { return N_; }
    const FieldRef& field() const { return K_; }
    const std::map<std::uint64_t, std::vector<AlgebraicNumber>>& coefficients() const { return coeffs_; }
    std::vector<std::uint64_t> primes() const {
        std::vector<std::uint64_t> out;
        for (const auto& [p, a] : coeffs_) out.push_back(p);
        return out;
    }
    bool has_parameters(std::uint64_t p) const { return alphas_.count(p) != 0; }

    /// Stores a Satake tuple; coefficients a_m = e_m(α) are derived.
    void add_parameters(std::uint64_t p, std::vector<AlgebraicNumber> alpha) {
        check_prime(p);
        if (alpha.size() != n_) throw invalid_input("expected " + std::to_string(n_) + " Satake parameters at p = " + std::to_string(p));
        for (const auto& x : alpha) {
            check_field(x);
            if (x.is_zero()) throw singular_parameter("zero Satake parameter at p = " + std::to_string(p));
        }
        auto e = elementary_symmetric(K_, alpha);
        coeffs_[p] = std::vector<AlgebraicNumber>(e.begin() + 1, e.end());
        alphas_[p] = std::move(alpha);
    }

    /// Stores Hecke coefficients a_1..a_n directly.
    void add_coefficients(std::uint64_t p, std::vector<AlgebraicNumber> a) {
        check_prime(p);
        if (a.size() != n_) throw invalid_input("expected " + std::to_string(n_) + " coefficients at p = " + std::to_string(p));
        for (const auto& x : a) check_field(x);
        if (a.back().is_zero()) throw singular_parameter("central value a_n vanishes at p = " + std::to_string(p));
        coeffs_[p] = std::move(a);
        alphas_.erase(p);
    }

    const std::vector<AlgebraicNumber>& coeffs_at(std::uint64_t p) const {
        auto it = coeffs_.find(p);
        if (it == coeffs_.end()) throw absent_data("no data at p = " + std::to_string(p));
        return it->second;
    }
    const std::vector<AlgebraicNumber>& parameters_at(std::uint64_t p) const {
        auto it = alphas_.find(p);
        if (it == alphas_.end()) throw absent_data("no Satake tuple stored at p = " + std::to_string(p));
        return it->second;
    }

private:
    void check_prime(std::uint64_t p) const {
        if (!arith::is_prime(p)) throw invalid_input(std::to_string(p) + " is not prime");
        if (N_ % p == 0) throw invalid_input("p = " + std::to_string(p) + " divides the conductor");
    }
    void check_field(const AlgebraicNumber& x) const {
        if (x.field()->defining_poly() != K_->defining_poly()) throw invalid_input("value outside the Hecke field");
    }

    unsigned n_;
    Int N_;
    FieldRef K_;
    std::map<std::uint64_t, std::vector<AlgebraicNumber>> coeffs_;
    std::map<std::uint64_t, std::vector<AlgebraicNumber>> alphas_;
};

/// Coefficients of H_p(T) = 1 - a_1 T + ... + (-1)^n a_n T^n, low-to-high.
inline std::vector<AlgebraicNumber> hecke_poly(const SatakeSystem& S, std::uint64_t p) {
    const auto& a = S.coeffs_at(p);
    std::vector<AlgebraicNumber> h{AlgebraicNumber::from_rational(S.field(), Rational(1))};
    for (std::size_t m = 1; m <= a.size(); ++m) h.push_back(m % 2 ? -a[m - 1] : a[m - 1]);
    return h;
}

/// ∏ (1 - α_i T) by direct polynomial multiplication.
inline std::vector<AlgebraicNumber> product_form(const FieldRef& K, const std::vector<AlgebraicNumber>& alpha) {
    std::vector<AlgebraicNumber> h{AlgebraicNumber::from_rational(K, Rational(1))};
    for (const auto& x : alpha) {
        std::vector<AlgebraicNumber> next(h.size() + 1, AlgebraicNumber::from_rational(K, Rational(0)));
        for (std::size_t i = 0; i < h.size(); ++i) {
            next[i] = next[i] + h[i];
            next[i + 1] = next[i + 1] - h[i] * x;
        }
        h = std::move(next);
    }
    return h;
}

inline AlgebraicNumber exterior_coeffs(const SatakeSystem& S, std::uint64_t p, unsigned m) {
    if (m < 1 || m > S.n()) throw invalid_input("exterior index must lie in 1..n");
    return S.coeffs_at(p)[m - 1];
}

/// e_m(α) = e_{n-m}(α^{-1}) e_n(α).
inline bool check_duality(const FieldRef& K, const std::vector<AlgebraicNumber>& alpha, unsigned m) {
    const std::size_t n = alpha.size();
    if (m > n) throw invalid_input("exterior index exceeds n");
    std::vector<AlgebraicNumber> inv;
    for (const auto& x : alpha) {
        if (x.is_zero()) throw singular_parameter("zero Satake parameter");
        inv.push_back(x.inverse());
    }
    const auto e = elementary_symmetric(K, alpha);
    const auto ei = elementary_symmetric(K, inv);
    return e[m] == ei[n - m] * e[n];
}

inline bool check_duality(const SatakeSystem& S, std::uint64_t p, unsigned m) {
    return check_duality(S.field(), S.parameters_at(p), m);
}

/// Applies θ ↦ image to every stored value.
inline SatakeSystem galois_conjugate(const SatakeSystem& S, const AlgebraicNumber& image) {
    const auto& K = S.field();
    // image must be a root of the defining polynomial
    AlgebraicNumber acc = AlgebraicNumber::from_rational(K, Rational(0));
    const auto& f = K->defining_poly();
    for (std::size_t i = f.size(); i-- > 0;) acc = acc * image + AlgebraicNumber::from_rational(K, Rational(f[i]));
    if (!acc.is_zero()) throw invalid_automorphism("generator image is not a root of the defining polynomial");
    SatakeSystem out(S.n(), S.conductor(), K);
    for (const auto& [p, a] : S.coefficients()) {
        if (S.has_parameters(p)) {
            std::vector<AlgebraicNumber> al;
            for (const auto& x : S.parameters_at(p)) al.push_back(x.apply_automorphism(image));
            out.add_parameters(p, std::move(al));
        } else {
            std::vector<AlgebraicNumber> c;
            for (const auto& x : a) c.push_back(x.apply_automorphism(image));
            out.add_coefficients(p, std::move(c));
        }
    }
    return out;
}

/// Every prime factor of a denominator divides N.
inline bool integral_away_from(const AlgebraicNumber& a, const Int& N) {
    Int d = a.denominator();
    for (const auto& r : arith::prime_factors(d))
        if (N % r != 0) return false;
    return true;
}

inline bool check_integrality(const SatakeSystem& S, std::uint64_t p) {
    for (const auto& a : S.coeffs_at(p))
        if (!integral_away_from(a, S.conductor())) return false;
    return true;
}

struct RankinResult {
    CertifiedInterval sum;     // Σ_{p<=P} |σ(a_m(p))|² p^{-s}
    long double bound = 0;     // C(n,m)² log(1/(s-1)) + slack
    bool below_bound = false;  // diagnostic only
    std::size_t terms = 0;
};

/// Partial Rankin–Selberg sum over all primes p <= P not dividing N, for the embedding `emb`.
inline RankinResult rankin_partial_sum(const SatakeSystem& S, unsigned m, const Rational& s, std::uint64_t P,
                                       const Rational& slack, std::size_t emb = 0, unsigned precision = 24) {
    if (s <= 1) throw invalid_input("s must exceed 1");
    if (m < 1 || m > S.n()) throw invalid_input("exterior index must lie in 1..n");
    std::vector<std::uint64_t> gaps;
    for (auto p : arith::primes_up_to(P))
        if (S.conductor() % p != 0 && !S.coefficients().count(p)) gaps.push_back(p);
    if (!gaps.empty()) {
        std::string msg = "missing primes:";
        for (std::size_t i = 0; i < gaps.size() && i < 20; ++i) msg += " " + std::to_string(gaps[i]);
        if (gaps.size() > 20) msg += " ...";
        throw absent_data(msg);
    }
    RankinResult r;
    r.sum = {Rational(0), Rational(0)};
    for (const auto& [p, a] : S.coefficients()) {
        if (p > P) break;
        const auto b = arith::embed_abs_sq_bounds(a[m - 1], precision).at(emb);
        const auto w = arith::neg_power_enclosure(p, s);
        r.sum.lo += b.lo * w.lo;
        r.sum.hi += b.hi * w.hi;
        ++r.terms;
    }
    const long double c = static_cast<long double>(arith::binomial(S.n(), m));
    r.bound = c * c * std::log(1.0L / arith::to_long_double(s - 1)) + arith::to_long_double(slack);
    r.below_bound = arith::to_long_double(r.sum.hi) <= r.bound;
    return r;
}

}  // namespace artin::satake
