#pragma once

/**
 * @file zmod.hpp
 * @brief Residues modulo a runtime modulus (prime or prime power).
 */

#include <cstdint>
#include <vector>

#include "artin/arith/integer.hpp"
#include "artin/arith/poly.hpp"

namespace artin::arith {

struct Zmod {
    std::uint64_t v = 0;
    std::uint64_t m = 1;

    static Zmod of(long long x, std::uint64_t m) {
        long long r = x % static_cast<long long>(m);
        if (r < 0) r += static_cast<long long>(m);
        return {static_cast<std::uint64_t>(r), m};
    }
    static Zmod of(const Int& x, std::uint64_t m) {
        Int r = x % m;
        if (r < 0) r += m;
        return {static_cast<std::uint64_t>(r), m};
    }

    friend Zmod operator+(Zmod a, Zmod b) {
        std::uint64_t s = a.v + b.v;
        if (s >= a.m) s -= a.m;
        return {s, a.m};
    }
    friend Zmod operator-(Zmod a, Zmod b) { return {a.v >= b.v ? a.v - b.v : a.v + a.m - b.v, a.m}; }
    friend Zmod operator*(Zmod a, Zmod b) { return {mulmod(a.v, b.v, a.m), a.m}; }
    friend Zmod operator/(Zmod a, Zmod b) { return a * b.inverse(); }
    Zmod operator-() const { return {v == 0 ? 0 : m - v, m}; }
    Zmod inverse() const { return {invmod(v, m), m}; }
    Zmod pow(std::uint64_t e) const { return {powmod(v, e, m), m}; }
    friend bool operator==(Zmod a, Zmod b) { return a.v == b.v && a.m == b.m; }
    friend bool is_zero(Zmod a) { return a.v == 0; }
};

using ZmodPoly = Poly<Zmod>;

inline ZmodPoly to_zmod_poly(const std::vector<Int>& coeffs, std::uint64_t m) {
    std::vector<Zmod> v;
    for (const auto& c : coeffs) v.push_back(Zmod::of(c, m));
    return ZmodPoly(std::move(v));
}

}  // namespace artin::arith
