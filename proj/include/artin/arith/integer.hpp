#pragma once

/**
 * @file integer.hpp
 * @brief Exact integers and rationals plus small number-theoretic helpers.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "artin/errors.hpp"

namespace artin::arith {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_zero(const Rational& r) { return r == 0; }

/// Parses "a", "-a" or "a/b" exactly.
inline Rational parse_rational(const std::string& text) {
    auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t") + 1);
        return s;
    };
    const std::string s = trim(text);
    auto parse_int = [&](const std::string& t) {
        if (t.empty()) throw invalid_input("malformed rational: '" + text + "'");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw invalid_input("malformed rational: '" + text + "'");
        for (std::size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9') throw invalid_input("malformed rational: '" + text + "'");
        return Int(t[0] == '+' ? t.substr(1) : t);
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    Int d = parse_int(s.substr(slash + 1));
    if (d == 0) throw invalid_input("zero denominator in '" + text + "'");
    return Rational(parse_int(s.substr(0, slash)), d);
}

inline std::string to_string(const Rational& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int ipow(const Int& b, unsigned e) { return boost::multiprecision::pow(b, e); }

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), nr = static_cast<std::int64_t>(a % m);
    while (nr != 0) {
        const std::int64_t q = r / nr;
        t = t - q * nt;
        std::swap(t, nt);
        r = r - q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw invalid_input("element not invertible modulo " + std::to_string(m));
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> sieve(limit + 1, true);
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (sieve[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (sieve[i]) out.push_back(i);
    return out;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::vector<Int> prime_factors(Int n) {
    std::vector<Int> out;
    if (n < 0) n = -n;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Smallest primitive root modulo the prime p.
inline std::uint64_t primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    const auto fs = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (auto f : fs)
            if (powmod(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw invalid_input("no primitive root modulo " + std::to_string(p));
}

/// If n = p^k for a prime p, returns {p, k}; otherwise {0, 0}.
inline std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
    if (n < 2) return {0, 0};
    const auto fs = prime_factors(n);
    if (fs.size() != 1) return {0, 0};
    unsigned k = 0;
    while (n > 1) {
        n /= fs[0];
        ++k;
    }
    return {fs[0], k};
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

/// Exact enclosure of sqrt(v) for rational v >= 0 with dyadic endpoints of 2^-bits resolution.
inline std::pair<Rational, Rational> sqrt_bounds(const Rational& v, unsigned bits) {
    if (v < 0) throw invalid_input("sqrt of negative rational");
    const Int scale = Int(1) << (2 * bits);
    const Int num = numer(v) * scale;
    const Int den = denom(v);
    const Int fl = num / den;
    const Int ce = (num % den == 0) ? fl : fl + 1;
    Int lo = boost::multiprecision::sqrt(fl);
    Int hi = boost::multiprecision::sqrt(ce);
    if (hi * hi < ce) hi += 1;
    const Int unit = Int(1) << bits;
    return {Rational(lo, unit), Rational(hi, unit)};
}

/// Exact rational value of a finite long double.
inline Rational exact_rational(long double x) {
    if (x == 0) return Rational(0);
    int e = 0;
    long double m = std::frexp(x, &e);
    // 64-bit mantissa
    m = std::ldexp(m, 64);
    e -= 64;
    const bool neg = m < 0;
    if (neg) m = -m;
    Int mi(static_cast<unsigned long long>(m));
    Rational r = (e >= 0) ? Rational(mi << e) : Rational(mi, Int(1) << (-e));
    return neg ? -r : r;
}

inline long double to_long_double(const Rational& r) {
    return static_cast<long double>(r);
}

}  // namespace artin::arith
