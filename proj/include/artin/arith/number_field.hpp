#pragma once

/**
 * @file number_field.hpp
 * @brief Number fields Q[x]/(f), exact elements, certified complex embeddings.
 *
 * Elements are rational coordinate vectors on the power basis 1, θ, ..., θ^(r-1).
 * Embeddings are indexed by the roots of f, sorted by imaginary part
 * (descending) and then real part (descending). Every statement about
 * |σ(a)|² is backed by a rational root disk: the disk around c of radius
 * r·|f(c)/f'(c)| always contains a root, and pairwise disjoint disks pin
 * each root down individually.
 */

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "artin/arith/integer.hpp"
#include "artin/arith/poly.hpp"
#include "artin/arith/zmod.hpp"
#include "artin/errors.hpp"

namespace artin::arith {

using RatPoly = Poly<Rational>;
using cld = std::complex<long double>;

inline RatPoly to_rat_poly(const std::vector<Int>& c) {
    std::vector<Rational> v(c.begin(), c.end());
    return RatPoly(std::move(v));
}

/// Coefficients (low-to-high) of the m-th cyclotomic polynomial.
inline std::vector<Int> cyclotomic_poly(unsigned m) {
    if (m == 0) throw invalid_input("cyclotomic index must be positive");
    // x^m - 1 divided by Φ_d for every proper divisor d
    std::vector<Rational> xm(m + 1, Rational(0));
    xm[0] = -1;
    xm[m] = 1;
    RatPoly f(xm);
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0) f = f / to_rat_poly(cyclotomic_poly(d));
    std::vector<Int> out;
    for (const auto& c : f.coeffs()) out.push_back(numer(c));
    return out;
}

/// A closed rational interval [lo, hi].
struct CertifiedInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const CertifiedInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    Rational width() const { return hi - lo; }
    CertifiedInterval intersect(const CertifiedInterval& o) const {
        return {std::max(lo, o.lo), std::min(hi, o.hi)};
    }
    friend bool operator==(const CertifiedInterval&, const CertifiedInterval&) = default;
};

/// Complex number with exact rational parts.
struct CRat {
    Rational re;
    Rational im;

    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRat operator/(const CRat& a, const CRat& b) {
        const Rational n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Rational norm_sq() const { return re * re + im * im; }
};

/// Disk {z : |z - center| <= radius} certified to contain exactly one root.
struct RootEnclosure {
    CRat center;
    Rational radius;
};

enum class BoundCompare { within, exceeds, uncertain };

class NumberField;
using FieldRef = std::shared_ptr<const NumberField>;

class NumberField {
public:
    struct Options {
        unsigned max_degree = 8;
        bool check_irreducible = true;
    };

    static FieldRef make(std::vector<Int> defining_poly, std::string label) {
        return make(std::move(defining_poly), std::move(label), Options{});
    }
    static FieldRef make(std::vector<Int> defining_poly, std::string label, Options opts) {
        return FieldRef(new NumberField(std::move(defining_poly), std::move(label), opts));
    }
    static FieldRef rationals() { return make({Int(-1), Int(1)}, "Q"); }
    static FieldRef cyclotomic(unsigned m) {
        Options o;
        o.max_degree = std::max<unsigned>(8, static_cast<unsigned>(euler_phi(m)));
        o.check_irreducible = false;
        return make(cyclotomic_poly(m), "Q(zeta_" + std::to_string(m) + ")", o);
    }

    unsigned degree() const { return static_cast<unsigned>(f_.size() - 1); }
    const std::vector<Int>& defining_poly() const { return f_; }
    const std::string& label() const { return label_; }
    const std::vector<cld>& approx_roots() const { return roots_; }
    /// Coordinates of complex conjugation as an automorphism, when the field is stable under it.
    const std::optional<std::vector<Rational>>& conjugation() const { return conj_; }

    /// If f is the m-th cyclotomic polynomial, returns m.
    std::optional<unsigned> cyclotomic_index() const {
        for (unsigned m = 1; m <= 420; ++m) {
            if (euler_phi(m) != degree()) continue;
            if (cyclotomic_poly(m) == f_) return m;
        }
        return std::nullopt;
    }

    /// Root disks at grid resolution 2^-bits, refined until pairwise disjoint.
    std::vector<RootEnclosure> certified_roots(unsigned bits, unsigned max_bits = 4096) const {
        const std::lock_guard<std::mutex> lock(cache_mu_);
        const auto key = std::make_pair(bits, max_bits);
        auto it = root_cache_.find(key);
        if (it != root_cache_.end()) return it->second;
        auto out = isolate_roots(bits, max_bits);
        root_cache_.emplace(key, out);
        return out;
    }

    static CRat eval_complex(const RatPoly& p, const CRat& z) {
        CRat r{Rational(0), Rational(0)};
        for (std::size_t i = p.size(); i-- > 0;) r = r * z + CRat{p[i], Rational(0)};
        return r;
    }

private:
    std::vector<RootEnclosure> isolate_roots(unsigned bits, unsigned max_bits) const {
        const auto fpoly = to_rat_poly(f_);
        const auto dpoly = fpoly.derivative();
        std::vector<CRat> centers;
        for (const auto& r : roots_) {
            long double im = r.imag();
            if (std::abs(im) < 1e-15L * (1 + std::abs(r))) im = 0;
            centers.push_back({exact_rational(r.real()), exact_rational(im)});
        }
        for (unsigned b = std::max(bits, 8u); b <= max_bits; b *= 2) {
            std::vector<RootEnclosure> out;
            bool ok = true;
            for (auto& c : centers) {
                c = newton_refine(c, fpoly, dpoly, b);
                const CRat fv = eval_complex(fpoly, c);
                const CRat dv = eval_complex(dpoly, c);
                const Rational dn = dv.norm_sq();
                if (dn == 0) {
                    ok = false;
                    break;
                }
                const Rational n = degree();
                const Rational rad_sq = n * n * fv.norm_sq() / dn;
                out.push_back({c, rad_sq == 0 ? Rational(0) : sqrt_bounds(rad_sq, b + 8).second});
            }
            if (ok) {
                for (std::size_t i = 0; i < out.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < out.size() && ok; ++j) {
                        const Rational s = out[i].radius + out[j].radius;
                        if (s * s >= (out[i].center - out[j].center).norm_sq()) ok = false;
                    }
            }
            if (ok) return out;
        }
        throw refinement_failure("root isolation for " + label_ + " did not converge within " +
                                 std::to_string(max_bits) + " bits");
    }

    NumberField(std::vector<Int> f, std::string label, Options opts) : f_(std::move(f)), label_(std::move(label)) {
        if (f_.size() < 2) throw invalid_input("defining polynomial must have degree >= 1");
        if (f_.back() != 1) throw invalid_input("defining polynomial must be monic");
        if (degree() > opts.max_degree)
            throw unsupported("field degree " + std::to_string(degree()) + " exceeds " +
                              std::to_string(opts.max_degree));
        const auto fp = to_rat_poly(f_);
        if (gcd(fp, fp.derivative()).degree() > 0) throw invalid_input("defining polynomial is not squarefree");
        roots_ = find_roots();
        if (opts.check_irreducible && !irreducible()) throw invalid_input("defining polynomial is reducible over Q");
        conj_ = find_conjugation();
    }

    static CRat round_to_grid(const CRat& z, unsigned bits) {
        auto rnd = [bits](const Rational& x) {
            const Int scale = Int(1) << bits;
            const Rational y = x * scale;
            // floor(y + 1/2)
            Int n = numer(y + Rational(1, 2));
            Int d = denom(y + Rational(1, 2));
            Int q = n / d;
            if (n < 0 && q * d != n) q -= 1;
            return Rational(q, scale);
        };
        return {rnd(z.re), rnd(z.im)};
    }

    static CRat newton_refine(CRat z, const RatPoly& f, const RatPoly& df, unsigned bits) {
        for (int it = 0; it < 64; ++it) {
            const CRat dv = eval_complex(df, z);
            if (dv.norm_sq() == 0) return z;
            const CRat next = round_to_grid(z - eval_complex(f, z) / dv, bits + 4);
            if (next.re == z.re && next.im == z.im) return z;
            z = next;
        }
        return z;
    }

    std::vector<cld> find_roots() const {
        const unsigned n = degree();
        std::vector<long double> a(f_.size());
        for (std::size_t i = 0; i < f_.size(); ++i) a[i] = static_cast<long double>(f_[i]);
        auto eval = [&](cld z, cld& deriv) {
            cld v = a[n];
            deriv = 0;
            for (unsigned i = n; i-- > 0;) {
                deriv = deriv * z + v;
                v = v * z + a[i];
            }
            return v;
        };
        long double bound = 0;
        for (unsigned i = 0; i < n; ++i) bound = std::max(bound, std::abs(a[i]));
        const long double radius = 0.5L * (1 + bound);
        std::vector<cld> z(n);
        for (unsigned k = 0; k < n; ++k) {
            const long double ang = 2 * 3.14159265358979323846L * k / n + 0.4L;
            z[k] = std::polar(radius, ang);
        }
        for (int iter = 0; iter < 2000; ++iter) {
            long double maxstep = 0;
            for (unsigned k = 0; k < n; ++k) {
                cld d;
                const cld v = eval(z[k], d);
                if (v == cld(0)) continue;
                const cld w = v / d;
                cld s = 0;
                for (unsigned j = 0; j < n; ++j)
                    if (j != k) s += cld(1) / (z[k] - z[j]);
                const cld step = w / (cld(1) - w * s);
                z[k] -= step;
                maxstep = std::max(maxstep, std::abs(step) / (1 + std::abs(z[k])));
            }
            if (maxstep < 1e-19L) break;
        }
        std::sort(z.begin(), z.end(), [](const cld& x, const cld& y) {
            const long double tol = 1e-12L;
            if (std::abs(x.imag() - y.imag()) > tol) return x.imag() > y.imag();
            return x.real() > y.real();
        });
        return z;
    }

    // Exhaustive factor search: every monic integer factor is a product of
    // (x - root) over some subset of roots; round each subset product and
    // confirm by exact division.
    bool irreducible() const {
        const unsigned n = degree();
        if (n == 1) return true;
        const RatPoly fp = to_rat_poly(f_);
        for (unsigned d = 1; 2 * d <= n; ++d) {
            std::vector<unsigned> idx(d);
            std::iota(idx.begin(), idx.end(), 0u);
            while (true) {
                std::vector<cld> prod{cld(1)};
                for (unsigned i : idx) {
                    std::vector<cld> next(prod.size() + 1, cld(0));
                    for (std::size_t j = 0; j < prod.size(); ++j) {
                        next[j + 1] += prod[j];
                        next[j] -= prod[j] * roots_[i];
                    }
                    prod = std::move(next);
                }
                bool integral = true;
                std::vector<Rational> g;
                for (const auto& c : prod) {
                    const long double r = std::round(c.real());
                    if (std::abs(c.imag()) > 0.25L || std::abs(c.real() - r) > 0.25L) {
                        integral = false;
                        break;
                    }
                    g.emplace_back(Int(static_cast<long long>(r)));
                }
                if (integral && (fp % RatPoly(g)).is_zero_poly()) return false;
                // next combination
                int i = static_cast<int>(d) - 1;
                while (i >= 0 && idx[i] == n - d + static_cast<unsigned>(i)) --i;
                if (i < 0) break;
                ++idx[i];
                for (unsigned j = static_cast<unsigned>(i) + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        return true;
    }

    // Complex conjugation as g(θ) with rational g, found numerically and then
    // verified exactly (f(g(θ)) = 0 in K) and numerically (g(r_i) = conj(r_i)).
    std::optional<std::vector<Rational>> find_conjugation() const {
        const unsigned n = degree();
        std::vector<Rational> ident(n, Rational(0));
        if (n == 1) return ident;
        bool all_real = true;
        for (const auto& r : roots_)
            if (std::abs(r.imag()) > 1e-12L) all_real = false;
        if (all_real) {
            ident[1] = 1;
            return ident;
        }
        // Solve the Vandermonde system V g = conj(roots) in complex long double.
        std::vector<std::vector<cld>> m(n, std::vector<cld>(n + 1));
        for (unsigned i = 0; i < n; ++i) {
            cld pw = 1;
            for (unsigned j = 0; j < n; ++j) {
                m[i][j] = pw;
                pw *= roots_[i];
            }
            m[i][n] = std::conj(roots_[i]);
        }
        for (unsigned col = 0; col < n; ++col) {
            unsigned piv = col;
            for (unsigned r = col + 1; r < n; ++r)
                if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
            std::swap(m[col], m[piv]);
            for (unsigned r = 0; r < n; ++r) {
                if (r == col) continue;
                const cld factor = m[r][col] / m[col][col];
                for (unsigned c = col; c <= n; ++c) m[r][c] -= factor * m[col][c];
            }
        }
        std::vector<Rational> g(n);
        for (unsigned j = 0; j < n; ++j) {
            const cld v = m[j][n] / m[j][j];
            if (std::abs(v.imag()) > 1e-9L) return std::nullopt;
            // small-denominator rational approximation
            bool found = false;
            for (long long den = 1; den <= 4096 && !found; ++den) {
                const long double num = std::round(v.real() * den);
                if (std::abs(v.real() * den - num) < 1e-9L * den) {
                    g[j] = Rational(Int(static_cast<long long>(num)), Int(den));
                    found = true;
                }
            }
            if (!found) return std::nullopt;
        }
        // exact check: f(g(x)) ≡ 0 mod f
        const RatPoly fp = to_rat_poly(f_);
        const RatPoly gp(g);
        RatPoly acc;
        for (std::size_t i = f_.size(); i-- > 0;) acc = (acc * gp + RatPoly({Rational(f_[i])})) % fp;
        if (!acc.is_zero_poly()) return std::nullopt;
        return g;
    }

    std::vector<Int> f_;
    std::string label_;
    std::vector<cld> roots_;
    std::optional<std::vector<Rational>> conj_;
    mutable std::mutex cache_mu_;
    mutable std::map<std::pair<unsigned, unsigned>, std::vector<RootEnclosure>> root_cache_;
};

/// Exact element of a number field.
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;
    AlgebraicNumber(FieldRef K, std::vector<Rational> coords) : K_(std::move(K)), c_(std::move(coords)) {
        if (!K_) throw invalid_input("algebraic number without a field");
        if (c_.size() > K_->degree()) reduce();
        c_.resize(K_->degree(), Rational(0));
    }
    static AlgebraicNumber from_rational(FieldRef K, const Rational& r) {
        std::vector<Rational> c(K->degree(), Rational(0));
        c[0] = r;
        return AlgebraicNumber(std::move(K), std::move(c));
    }
    /// The class of x, i.e. θ.
    static AlgebraicNumber generator(FieldRef K) {
        std::vector<Rational> c(std::max(2u, K->degree()), Rational(0));
        c[1] = 1;
        return AlgebraicNumber(std::move(K), std::move(c));
    }

    const FieldRef& field() const { return K_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
    }
    bool is_rational() const {
        return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return r == 0; });
    }
    /// All power-basis coordinates are integers.
    bool has_integral_coords() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return denom(r) == 1; });
    }
    /// Least common denominator of the coordinates.
    Int denominator() const {
        Int l = 1;
        for (const auto& r : c_) l = boost::multiprecision::lcm(l, denom(r));
        return l;
    }

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        check_same(a, b);
        std::vector<Rational> v(a.c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.c_[i] + b.c_[i];
        return AlgebraicNumber(a.K_, std::move(v), raw_tag{});
    }
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        check_same(a, b);
        std::vector<Rational> v(a.c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.c_[i] - b.c_[i];
        return AlgebraicNumber(a.K_, std::move(v), raw_tag{});
    }
    AlgebraicNumber operator-() const {
        std::vector<Rational> v(c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = -c_[i];
        return AlgebraicNumber(K_, std::move(v), raw_tag{});
    }
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        check_same(a, b);
        const std::size_t n = a.c_.size();
        std::vector<Rational> prod(2 * n - 1, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
        }
        return AlgebraicNumber(a.K_, std::move(prod));
    }
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const Rational& s) {
        std::vector<Rational> v(a.c_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.c_[i] * s;
        return AlgebraicNumber(a.K_, std::move(v), raw_tag{});
    }
    AlgebraicNumber inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero algebraic number");
        const RatPoly m = to_rat_poly(K_->defining_poly());
        auto [g, u] = gcd_with_cofactor(RatPoly(c_), m, Rational(1));
        if (g.degree() != 0) throw verification_failure("non-invertible element: field polynomial reducible?");
        return AlgebraicNumber(K_, u.coeffs());
    }
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * b.inverse(); }
    AlgebraicNumber pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        AlgebraicNumber r = from_rational(K_, Rational(1)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a.K_->defining_poly() == b.K_->defining_poly() && a.c_ == b.c_;
    }
    friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.c_ < b.c_; }
    friend bool is_zero(const AlgebraicNumber& a) { return a.is_zero(); }

    /// Image under the automorphism θ ↦ image. Image must be a root of f in K.
    AlgebraicNumber apply_automorphism(const AlgebraicNumber& image) const {
        AlgebraicNumber r = from_rational(K_, Rational(0));
        for (std::size_t i = c_.size(); i-- > 0;) r = r * image + from_rational(K_, c_[i]);
        return r;
    }

    /// Complex value at the approximate root with the given embedding index.
    cld approx_embedding(std::size_t i) const {
        const cld z = K_->approx_roots().at(i);
        cld r = 0;
        for (std::size_t k = c_.size(); k-- > 0;) r = r * z + cld(static_cast<long double>(c_[k]), 0);
        return r;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + arith::to_string(c_[i]);
        return s + "]";
    }

private:
    struct raw_tag {};
    AlgebraicNumber(FieldRef K, std::vector<Rational> c, raw_tag) : K_(std::move(K)), c_(std::move(c)) {}

    static void check_same(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (a.K_ != b.K_ && a.K_->defining_poly() != b.K_->defining_poly())
            throw invalid_input("arithmetic between different number fields");
    }

    void reduce() {
        const auto& f = K_->defining_poly();
        const std::size_t n = f.size() - 1;
        for (std::size_t i = c_.size(); i-- > n;) {
            const Rational t = c_[i];
            if (t == 0) continue;
            for (std::size_t j = 0; j <= n; ++j) c_[i - n + j] -= t * Rational(f[j]);
        }
        c_.resize(n);
    }

    FieldRef K_;
    std::vector<Rational> c_;
};

/// |σ_i(a)|² enclosure using root disks at the given grid resolution.
inline CertifiedInterval abs_sq_raw(const AlgebraicNumber& a, std::size_t emb, const RootEnclosure& root,
                                    unsigned bits) {
    const auto& K = *a.field();
    if (a.is_rational()) {
        const Rational v = a.coords()[0] * a.coords()[0];
        return {v, v};
    }
    // |c| <= R - ρ
    const Rational cabs = sqrt_bounds(root.center.norm_sq(), bits).second;
    const Rational R = cabs + root.radius;
    auto perturbation = [&](const std::vector<Rational>& x) {
        Rational delta = 0;
        Rational Rpow = 1;
        for (std::size_t k = 1; k < x.size(); ++k) {
            Rational ak = x[k] < 0 ? Rational(-x[k]) : x[k];
            delta += ak * Rational(static_cast<long>(k)) * root.radius * Rpow;
            Rpow *= R;
        }
        return delta;
    };
    (void)emb;
    if (K.conjugation()) {
        // |σ(a)|² = σ(a · conj(a)), a real number
        const AlgebraicNumber conj_gen(a.field(), *K.conjugation());
        const AlgebraicNumber b = a * a.apply_automorphism(conj_gen);
        if (b.is_rational()) return {b.coords()[0], b.coords()[0]};
        const CRat v = NumberField::eval_complex(RatPoly(b.coords()), root.center);
        const Rational delta = perturbation(b.coords());
        Rational lo = v.re - delta;
        if (lo < 0) lo = 0;
        return {lo, v.re + delta};
    }
    const CRat v = NumberField::eval_complex(RatPoly(a.coords()), root.center);
    const Rational delta = perturbation(a.coords());
    if (delta == 0) return {v.norm_sq(), v.norm_sq()};
    const auto [slo, shi] = sqrt_bounds(v.norm_sq(), bits);
    Rational lo = slo - delta;
    if (lo < 0) lo = 0;
    return {lo * lo, (shi + delta) * (shi + delta)};
}

/// One enclosure of |σ_i(a)|² per complex embedding, each of width at most 2^-precision.
/// Results are intersected across precisions 1..precision, so they shrink monotonically.
inline std::vector<CertifiedInterval> embed_abs_sq_bounds(const AlgebraicNumber& a, unsigned precision,
                                                          unsigned max_bits = 4096) {
    const auto& K = *a.field();
    const std::size_t r = K.degree();
    if (precision == 0) throw invalid_input("precision must be positive");
    if (a.is_rational()) {
        const Rational v = a.coords()[0] * a.coords()[0];
        return std::vector<CertifiedInterval>(r, CertifiedInterval{v, v});
    }
    std::vector<std::optional<CertifiedInterval>> acc(r);
    unsigned bits = 24;
    for (unsigned j = 1; j <= precision; ++j) {
        const Rational target(Int(1), Int(1) << j);
        while (true) {
            const auto roots = K.certified_roots(bits, max_bits);
            bool wide = false;
            std::vector<CertifiedInterval> raw(r);
            for (std::size_t i = 0; i < r; ++i) {
                raw[i] = abs_sq_raw(a, i, roots[i], bits);
                if (acc[i]) raw[i] = raw[i].intersect(*acc[i]);
                if (raw[i].width() > target) wide = true;
            }
            if (!wide) {
                for (std::size_t i = 0; i < r; ++i) acc[i] = raw[i];
                break;
            }
            if (bits >= max_bits)
                throw refinement_failure("embedding bound did not reach 2^-" + std::to_string(j));
            bits *= 2;
        }
    }
    std::vector<CertifiedInterval> out;
    for (auto& x : acc) out.push_back(*x);
    return out;
}

/// Decides |σ_i(a)|² <= c with refinement up to max_bits.
inline BoundCompare compare_abs_sq(const AlgebraicNumber& a, std::size_t emb, const Rational& c,
                                   unsigned max_bits = 512) {
    for (unsigned bits = 32; bits <= max_bits; bits *= 2) {
        const auto roots = a.field()->certified_roots(bits, std::max(bits, max_bits));
        const auto iv = abs_sq_raw(a, emb, roots.at(emb), bits);
        if (iv.hi <= c) return BoundCompare::within;
        if (iv.lo > c) return BoundCompare::exceeds;
        if (iv.lo == iv.hi) break;
    }
    return BoundCompare::uncertain;
}

/// Decides whether every embedding satisfies |σ(a)|² <= c.
inline BoundCompare compare_all_abs_sq(const AlgebraicNumber& a, const Rational& c, unsigned max_bits = 512) {
    if (a.is_rational()) return a.coords()[0] * a.coords()[0] <= c ? BoundCompare::within : BoundCompare::exceeds;
    bool uncertain = false;
    for (std::size_t i = 0; i < a.field()->degree(); ++i) {
        const auto r = compare_abs_sq(a, i, c, max_bits);
        if (r == BoundCompare::exceeds) return r;
        if (r == BoundCompare::uncertain) uncertain = true;
    }
    return uncertain ? BoundCompare::uncertain : BoundCompare::within;
}

/// Reduction of a modulo the degree-one place (ℓ, θ ↦ r).
inline std::uint64_t reduce_mod_place(const AlgebraicNumber& a, std::uint64_t ell, std::uint64_t r) {
    if (!is_prime(ell)) throw invalid_place(std::to_string(ell) + " is not prime");
    const auto fz = to_zmod_poly(a.field()->defining_poly(), ell);
    const Zmod rz = Zmod::of(static_cast<long long>(r % ell), ell);
    if (!is_zero(fz.evaluate(rz)))
        throw invalid_place(std::to_string(r) + " is not a root of the defining polynomial mod " + std::to_string(ell));
    if (is_zero(fz.derivative().evaluate(rz)))
        throw invalid_place(std::to_string(r) + " is a repeated root mod " + std::to_string(ell));
    Zmod acc = Zmod::of(0LL, ell);
    for (std::size_t k = a.coords().size(); k-- > 0;) {
        const Rational& c = a.coords()[k];
        const Int d = denom(c);
        if (d % ell == 0)
            throw bad_reduction(std::to_string(ell) + " divides a denominator of " + a.to_string());
        const Zmod term = Zmod::of(numer(c), ell) * Zmod::of(d, ell).inverse();
        acc = acc * rz + term;
    }
    return acc.v;
}

/// ℓ splits completely in K: f is squarefree mod ℓ and divides x^ℓ - x.
inline bool splits_completely(const NumberField& K, std::uint64_t ell) {
    if (!is_prime(ell)) throw invalid_input(std::to_string(ell) + " is not prime");
    const auto f = to_zmod_poly(K.defining_poly(), ell);
    if (f.degree() < static_cast<int>(K.degree())) return false;
    if (f.degree() == 1) return true;
    if (gcd(f, f.derivative()).degree() > 0) return false;
    const Zmod one = Zmod::of(1LL, ell);
    const ZmodPoly x({Zmod::of(0LL, ell), one});
    const ZmodPoly xl = powmod(x, Int(ell), f, one);
    return ((xl - x) % f).is_zero_poly();
}

/// Roots of the defining polynomial mod ℓ, ascending.
inline std::vector<std::uint64_t> roots_mod(const NumberField& K, std::uint64_t ell) {
    const auto f = to_zmod_poly(K.defining_poly(), ell);
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < ell; ++r)
        if (is_zero(f.evaluate(Zmod::of(static_cast<long long>(r), ell)))) out.push_back(r);
    return out;
}

}  // namespace artin::arith
