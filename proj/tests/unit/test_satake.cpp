#include <gtest/gtest.h>

#include <random>

#include "artin/satake/satake.hpp"

#include "support/oracles.hpp"

using namespace artin;
using namespace artin::satake;
using arith::NumberField;

namespace {

AlgebraicNumber rat(const FieldRef& K, Rational r) { return AlgebraicNumber::from_rational(K, r); }

std::vector<AlgebraicNumber> pm1_pmi(const FieldRef& Qi) {
    const auto i = AlgebraicNumber::generator(Qi);
    return {rat(Qi, 1), rat(Qi, -1), i, -i};
}

AlgebraicNumber random_unit(const FieldRef& K, std::mt19937_64& rng) {
    while (true) {
        std::vector<Rational> c;
        for (unsigned k = 0; k < K->degree(); ++k)
            c.emplace_back(static_cast<long long>(rng() % 9) - 4, 1 + static_cast<long long>(rng() % 3));
        AlgebraicNumber a(K, c);
        if (!a.is_zero()) return a;
    }
}

}  // namespace

TEST(HeckePoly, Examples) {
    const auto Q = NumberField::rationals();
    SatakeSystem S(2, 1, Q);
    S.add_parameters(2, {rat(Q, 1), rat(Q, 1)});
    const auto h = hecke_poly(S, 2);
    ASSERT_EQ(h.size(), 3u);
    EXPECT_EQ(h[0], rat(Q, 1));
    EXPECT_EQ(h[1], rat(Q, -2));
    EXPECT_EQ(h[2], rat(Q, 1));

    const auto Qi = NumberField::cyclotomic(4);
    const auto i = AlgebraicNumber::generator(Qi);
    SatakeSystem T(2, 1, Qi);
    T.add_parameters(5, {i, -i});
    const auto ht = hecke_poly(T, 5);
    EXPECT_TRUE(ht[1].is_zero());
    EXPECT_EQ(ht[2], rat(Qi, 1));

    SatakeSystem U(4, 1, Qi);
    U.add_parameters(3, pm1_pmi(Qi));
    const auto hu = hecke_poly(U, 3);
    EXPECT_TRUE(hu[1].is_zero() && hu[2].is_zero() && hu[3].is_zero());
    EXPECT_EQ(hu[4], rat(Qi, -1));
    EXPECT_THROW(hecke_poly(U, 7), absent_data);
}

TEST(HeckePoly, AgreesWithProductForm) {
    const auto K = NumberField::cyclotomic(12);
    std::mt19937_64 rng(1);
    SatakeSystem S(4, 1, K);
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
        std::vector<AlgebraicNumber> a;
        for (int k = 0; k < 4; ++k) a.push_back(random_unit(K, rng));
        S.add_parameters(p, a);
        EXPECT_EQ(hecke_poly(S, p), product_form(K, a));
        for (unsigned m = 1; m <= 4; ++m) EXPECT_EQ(exterior_coeffs(S, p, m), oracle::subset_e(K, a, m));
    }
}

TEST(ExteriorCoeffs, Examples) {
    const auto Q = NumberField::rationals();
    SatakeSystem S(4, 1, Q);
    S.add_parameters(2, std::vector<AlgebraicNumber>(4, rat(Q, 1)));
    EXPECT_EQ(exterior_coeffs(S, 2, 2), rat(Q, 6));
    const auto Qi = NumberField::cyclotomic(4);
    SatakeSystem T(4, 1, Qi);
    T.add_parameters(2, pm1_pmi(Qi));
    EXPECT_TRUE(exterior_coeffs(T, 2, 2).is_zero());
    EXPECT_EQ(exterior_coeffs(T, 2, 4), rat(Qi, -1));
    EXPECT_THROW(exterior_coeffs(T, 2, 5), invalid_input);
}

TEST(Duality, Examples) {
    const auto Qi = NumberField::cyclotomic(4);
    const auto a = pm1_pmi(Qi);
    EXPECT_TRUE(check_duality(Qi, a, 2));
    EXPECT_TRUE(check_duality(Qi, {a[2], rat(Qi, 3)}, 1));
    EXPECT_THROW(check_duality(Qi, {rat(Qi, 0), rat(Qi, 1)}, 1), singular_parameter);
}

TEST(Duality, RandomTuplesOverZeta12) {
    const auto K = NumberField::cyclotomic(12);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const unsigned n = 1 + static_cast<unsigned>(rng() % 4);
        std::vector<AlgebraicNumber> a;
        for (unsigned k = 0; k < n; ++k) a.push_back(random_unit(K, rng));
        for (unsigned m = 0; m <= n; ++m) EXPECT_TRUE(check_duality(K, a, m));
    }
}

TEST(SatakeSystem, RejectsBadInput) {
    const auto Q = NumberField::rationals();
    SatakeSystem S(2, 6, Q);
    EXPECT_THROW(S.add_parameters(3, {rat(Q, 1), rat(Q, 1)}), invalid_input);
    EXPECT_THROW(S.add_parameters(9, {rat(Q, 1), rat(Q, 1)}), invalid_input);
    EXPECT_THROW(S.add_parameters(5, {rat(Q, 1)}), invalid_input);
    EXPECT_THROW(S.add_parameters(5, {rat(Q, 1), rat(Q, 0)}), singular_parameter);
    EXPECT_THROW(S.add_coefficients(5, {rat(Q, 1), rat(Q, 0)}), singular_parameter);
    EXPECT_THROW(SatakeSystem(0, 1, Q), invalid_input);
}

TEST(GaloisConjugate, Examples) {
    const auto Qi = NumberField::cyclotomic(4);
    const auto i = AlgebraicNumber::generator(Qi);
    SatakeSystem S(2, 1, Qi);
    S.add_parameters(5, {i, -i});
    const auto same = galois_conjugate(S, i);
    EXPECT_EQ(hecke_poly(same, 5), hecke_poly(S, 5));
    const auto conj = galois_conjugate(S, -i);
    EXPECT_EQ(hecke_poly(conj, 5), hecke_poly(S, 5));
    EXPECT_EQ(conj.parameters_at(5)[0], -i);

    const auto K = NumberField::make({Int(-2), Int(0), Int(1)}, "Q(sqrt2)");
    const auto r2 = AlgebraicNumber::generator(K);
    SatakeSystem T(1, 1, K);
    T.add_coefficients(3, {r2});
    EXPECT_EQ(exterior_coeffs(galois_conjugate(T, -r2), 3, 1), -r2);
    EXPECT_THROW(galois_conjugate(T, r2 + rat(K, 1)), invalid_automorphism);
}

TEST(GaloisConjugate, CommutesWithHeckePoly) {
    const auto K = NumberField::cyclotomic(12);
    const auto z = AlgebraicNumber::generator(K);
    std::mt19937_64 rng(4);
    SatakeSystem S(3, 1, K);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        std::vector<AlgebraicNumber> a;
        for (int k = 0; k < 3; ++k) a.push_back(random_unit(K, rng));
        S.add_parameters(p, a);
    }
    for (long long k : {5, 7, 11}) {
        const auto img = z.pow(k);
        const auto C = galois_conjugate(S, img);
        for (auto p : S.primes()) {
            auto h = hecke_poly(S, p);
            for (auto& c : h) c = c.apply_automorphism(img);
            EXPECT_EQ(hecke_poly(C, p), h);
        }
    }
}

TEST(Integrality, Examples) {
    const auto Q = NumberField::rationals();
    SatakeSystem A(1, 2, Q);
    A.add_coefficients(3, {rat(Q, Rational(1, 2))});
    EXPECT_TRUE(check_integrality(A, 3));
    SatakeSystem B(1, 2, Q);
    B.add_coefficients(5, {rat(Q, Rational(1, 3))});
    EXPECT_FALSE(check_integrality(B, 5));
    const auto K = NumberField::cyclotomic(3);
    SatakeSystem C(1, 7, K);
    C.add_coefficients(2, {AlgebraicNumber(K, {Rational(1, 7), Rational(1, 7)})});
    EXPECT_TRUE(check_integrality(C, 2));
}

TEST(Rankin, SingleTermIsExact) {
    const auto Q = NumberField::rationals();
    SatakeSystem S(1, 1, Q);
    S.add_coefficients(2, {rat(Q, 3)});
    const auto r = rankin_partial_sum(S, 1, Rational(2), 2, Rational(0));
    EXPECT_EQ(r.sum.lo, Rational(9, 4));
    EXPECT_EQ(r.sum.hi, Rational(9, 4));
    EXPECT_EQ(r.terms, 1u);
}

TEST(Rankin, VanishingCoefficientsSumToZero) {
    const auto Qi = NumberField::cyclotomic(4);
    const auto i = AlgebraicNumber::generator(Qi);
    SatakeSystem S(2, 1, Qi);
    for (auto p : arith::primes_up_to(100)) S.add_parameters(p, {i, -i});
    const auto r = rankin_partial_sum(S, 1, Rational(3, 2), 100, Rational(0));
    EXPECT_EQ(r.sum.lo, 0);
    EXPECT_EQ(r.sum.hi, 0);
    EXPECT_TRUE(r.below_bound);
}

TEST(Rankin, TemperedSystemStaysBelowBound) {
    const auto K = NumberField::cyclotomic(12);
    const auto z = AlgebraicNumber::generator(K);
    SatakeSystem S(2, 1, K);
    for (auto p : arith::primes_up_to(10000)) {
        const long long k = static_cast<long long>(p % 12);
        S.add_parameters(p, {z.pow(k), z.pow(12 - k)});
    }
    const auto r = rankin_partial_sum(S, 1, Rational(101, 100), 10000, Rational(10));
    EXPECT_GE(r.sum.lo, 0);
    EXPECT_LE(r.sum.lo, r.sum.hi);
    EXPECT_TRUE(r.below_bound);
    EXPECT_EQ(r.terms, 1229u);
}

TEST(Rankin, MissingPrimesAreReported) {
    const auto Q = NumberField::rationals();
    SatakeSystem S(1, 1, Q);
    S.add_coefficients(2, {rat(Q, 1)});
    S.add_coefficients(5, {rat(Q, 1)});
    try {
        rankin_partial_sum(S, 1, Rational(2), 5, Rational(0));
        FAIL() << "expected absent_data";
    } catch (const absent_data& e) {
        EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
    }
    EXPECT_THROW(rankin_partial_sum(S, 1, Rational(1), 2, Rational(0)), invalid_input);
}
