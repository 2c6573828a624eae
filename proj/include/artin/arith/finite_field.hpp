#pragma once

/**
 * @file finite_field.hpp
 * @brief Finite fields F_q, q = p^k < 2^16, built as F_p[x]/(f) with f primitive.
 *
 * An element is encoded by the integer whose base-p digits are its
 * coordinates on the basis 1, x, ..., x^(k-1). For prime q this is the
 * usual residue. Multiplication goes through discrete-log tables since x
 * generates the multiplicative group.
 */

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "artin/arith/integer.hpp"
#include "artin/arith/poly.hpp"

namespace artin::arith {

class FiniteField {
public:
    using elem = std::uint32_t;

    /// Field of size q with the lexicographically first primitive modulus.
    static std::shared_ptr<const FiniteField> make(std::uint32_t q) {
        auto [p, k] = prime_power(q);
        if (p == 0) throw invalid_input("field size " + std::to_string(q) + " is not a prime power");
        if (q >= (1u << 16)) throw unsupported("field size " + std::to_string(q) + " exceeds 65535");
        return std::shared_ptr<const FiniteField>(new FiniteField(static_cast<std::uint32_t>(p), k));
    }

    std::uint32_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint32_t q() const { return q_; }
    /// Coefficients (low-to-high, monic, degree k) of the defining polynomial over F_p.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    elem zero() const { return 0; }
    elem one() const { return 1; }
    /// The class of x, a generator of the multiplicative group.
    elem generator() const { return k_ == 1 ? exp_[1 % (q_ - 1)] : p_; }

    elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<elem>(r);
    }

    elem add(elem a, elem b) const {
        if (k_ == 1) {
            const elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_digits(a, b);
    }
    elem neg(elem a) const {
        if (k_ == 1) return a == 0 ? 0 : p_ - a;
        return neg_[a];
    }
    elem sub(elem a, elem b) const { return add(a, neg(b)); }
    elem mul(elem a, elem b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    elem inv(elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero in F_q");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    elem div(elem a, elem b) const { return mul(a, inv(b)); }
    elem pow(elem a, long long e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        const long long n = q_ - 1;
        long long r = (static_cast<long long>(log_[a]) * (e % n)) % n;
        if (r < 0) r += n;
        return exp_[static_cast<std::size_t>(r)];
    }
    /// Discrete log to base generator(); a != 0.
    std::uint32_t log(elem a) const { return log_[a]; }
    elem exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }
    /// a^p
    elem frobenius(elem a) const { return pow(a, p_); }
    /// True when a lies in the prime field.
    bool in_prime_field(elem a) const { return a < p_; }

    std::vector<std::uint32_t> digits(elem a) const {
        std::vector<std::uint32_t> d(k_);
        for (unsigned i = 0; i < k_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }
    elem from_digits(const std::vector<std::uint32_t>& d) const {
        elem r = 0;
        for (std::size_t i = d.size(); i-- > 0;) r = r * p_ + (d[i] % p_);
        return r;
    }

    std::string describe() const { return "F_" + std::to_string(q_); }

private:
    FiniteField(std::uint32_t p, unsigned k) : p_(p), k_(k) {
        q_ = 1;
        for (unsigned i = 0; i < k; ++i) q_ *= p;
        if (k == 1) {
            modulus_ = {0, 1};
            const std::uint32_t g = static_cast<std::uint32_t>(primitive_root(p));
            // modulus x - g makes the class of x equal to g
            modulus_[0] = (p - g) % p;
            build_tables_prime(g);
        } else {
            find_primitive_modulus();
        }
    }

    elem add_digits(elem a, elem b) const {
        elem r = 0, scale = 1;
        for (unsigned i = 0; i < k_; ++i) {
            r += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return r;
    }

    void build_tables_prime(std::uint32_t g) {
        exp_.assign(q_ - 1, 0);
        log_.assign(q_, 0);
        std::uint64_t x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = static_cast<elem>(x);
            log_[x] = i;
            x = x * g % p_;
        }
    }

    // Multiply the element with digit vector d by x modulo the monic modulus f.
    std::vector<std::uint32_t> times_x(const std::vector<std::uint32_t>& d,
                                       const std::vector<std::uint32_t>& f) const {
        std::vector<std::uint32_t> r(k_, 0);
        const std::uint32_t top = d[k_ - 1];
        for (unsigned i = k_ - 1; i > 0; --i) r[i] = d[i - 1];
        r[0] = 0;
        for (unsigned i = 0; i < k_; ++i) r[i] = (r[i] + (p_ - (top * f[i]) % p_)) % p_;
        return r;
    }

    void find_primitive_modulus() {
        const std::uint32_t tail_count = q_;  // p^k choices for the lower coefficients
        for (std::uint32_t code = 0; code < tail_count; ++code) {
            std::vector<std::uint32_t> f(k_ + 1, 0);
            std::uint32_t c = code;
            for (unsigned i = 0; i < k_; ++i) {
                f[i] = c % p_;
                c /= p_;
            }
            f[k_] = 1;
            if (f[0] == 0) continue;
            // order of x must be exactly q - 1
            std::vector<std::uint32_t> d(k_, 0);
            d[0] = 1;
            std::vector<elem> exps;
            exps.reserve(q_ - 1);
            bool ok = true;
            for (std::uint32_t i = 0; i < q_ - 1; ++i) {
                const elem e = from_digits(d);
                if (e == 0 || (i > 0 && e == 1)) {
                    ok = false;
                    break;
                }
                exps.push_back(e);
                d = times_x(d, f);
            }
            if (!ok || from_digits(d) != 1) continue;
            modulus_ = f;
            exp_ = std::move(exps);
            log_.assign(q_, 0);
            for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
            neg_.assign(q_, 0);
            for (elem a = 0; a < q_; ++a) {
                auto dd = digits(a);
                for (auto& v : dd) v = (p_ - v) % p_;
                neg_[a] = from_digits(dd);
            }
            if (q_ <= 1024) {
                add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
                for (elem a = 0; a < q_; ++a)
                    for (elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digits(a, b);
            }
            return;
        }
        throw invalid_input("no primitive polynomial found");
    }

    std::uint32_t p_;
    unsigned k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<elem> neg_;
    std::vector<elem> add_table_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Value-type element for use in generic containers such as Poly.
struct Fq {
    const FiniteField* field = nullptr;
    FiniteField::elem v = 0;

    friend Fq operator+(Fq a, Fq b) { return {a.field, a.field->add(a.v, b.v)}; }
    friend Fq operator-(Fq a, Fq b) { return {a.field, a.field->sub(a.v, b.v)}; }
    friend Fq operator*(Fq a, Fq b) { return {a.field, a.field->mul(a.v, b.v)}; }
    friend Fq operator/(Fq a, Fq b) { return {a.field, a.field->div(a.v, b.v)}; }
    Fq operator-() const { return {field, field->neg(v)}; }
    friend bool operator==(Fq a, Fq b) { return a.v == b.v; }
    friend bool is_zero(Fq a) { return a.v == 0; }
};

using FqPoly = Poly<Fq>;

inline FqPoly make_fq_poly(const FiniteField& F, const std::vector<long long>& coeffs) {
    std::vector<Fq> v;
    for (auto c : coeffs) v.push_back({&F, F.from_int(c)});
    return FqPoly(std::move(v));
}

inline FqPoly make_fq_poly_raw(const FiniteField& F, const std::vector<FiniteField::elem>& coeffs) {
    std::vector<Fq> v;
    for (auto c : coeffs) v.push_back({&F, c});
    return FqPoly(std::move(v));
}

inline std::vector<FiniteField::elem> raw_coeffs(const FqPoly& f) {
    std::vector<FiniteField::elem> v;
    for (const auto& c : f.coeffs()) v.push_back(c.v);
    return v;
}

/// Roots of f in F_q by exhaustive search, ascending by encoding.
inline std::vector<FiniteField::elem> roots_by_search(const FiniteField& F, const FqPoly& f) {
    std::vector<FiniteField::elem> out;
    for (FiniteField::elem a = 0; a < F.q(); ++a)
        if (is_zero(f.evaluate({&F, a}))) out.push_back(a);
    return out;
}

/// Irreducible monic factors with multiplicities, by trial division in degree order.
inline std::vector<std::pair<FqPoly, unsigned>> factor_trial(const FiniteField& F, FqPoly f) {
    std::vector<std::pair<FqPoly, unsigned>> out;
    f = f.monic();
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= F.q();
        for (std::uint64_t code = 0; code < count && 2 * d <= f.degree(); ++code) {
            std::vector<Fq> g(d + 1, Fq{&F, 0});
            std::uint64_t c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = {&F, static_cast<FiniteField::elem>(c % F.q())};
                c /= F.q();
            }
            g[d] = {&F, 1};
            FqPoly gp(g);
            unsigned mult = 0;
            while (f.degree() >= d) {
                auto [quo, rem] = divmod(f, gp);
                if (!rem.is_zero_poly()) break;
                f = quo;
                ++mult;
            }
            if (mult > 0) out.emplace_back(gp, mult);
        }
    }
    if (f.degree() >= 1) {
        bool merged = false;
        for (auto& [g, m] : out)
            if (g == f) {
                ++m;
                merged = true;
            }
        if (!merged) out.emplace_back(f, 1u);
    }
    return out;
}

}  // namespace artin::arith
