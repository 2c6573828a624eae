#include <gtest/gtest.h>

#include <random>

#include "artin/arith/analytic.hpp"
#include "artin/arith/finite_field.hpp"
#include "artin/arith/integer.hpp"
#include "artin/arith/number_field.hpp"

using namespace artin;
using namespace artin::arith;

namespace {

bool contains(const CertifiedInterval& iv, const Rational& x) { return iv.lo <= x && x <= iv.hi; }

FieldRef qsqrt2() { return NumberField::make({Int(-2), Int(0), Int(1)}, "Q(sqrt2)"); }

AlgebraicNumber random_element(const FieldRef& K, std::mt19937_64& rng) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < K->degree(); ++i)
        c.emplace_back(static_cast<long long>(rng() % 11) - 5, 1 + static_cast<long long>(rng() % 4));
    return AlgebraicNumber(K, c);
}

}  // namespace

TEST(Rational, ParsesFractionsAndIntegers) {
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_THROW(parse_rational("1/0"), invalid_input);
    EXPECT_THROW(parse_rational("x"), invalid_input);
    EXPECT_EQ(to_string(Rational(-4, 6)), "-2/3");
}

TEST(EmbedAbsSq, RationalIsExact) {
    const auto Q = NumberField::rationals();
    const auto b = embed_abs_sq_bounds(AlgebraicNumber::from_rational(Q, 2), 30);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0].lo, 4);
    EXPECT_EQ(b[0].hi, 4);
}

TEST(EmbedAbsSq, OnePlusZeta3HasModulusOne) {
    const auto K = NumberField::cyclotomic(3);
    const auto a = AlgebraicNumber(K, {Rational(1), Rational(1)});
    const auto b = embed_abs_sq_bounds(a, 40);
    ASSERT_EQ(b.size(), 2u);
    for (const auto& iv : b) {
        EXPECT_TRUE(contains(iv, 1));
        EXPECT_LE(iv.hi - iv.lo, Rational(1, 1ULL << 40));
    }
}

TEST(EmbedAbsSq, Sqrt2SquaresToTwo) {
    const auto K = qsqrt2();
    for (const auto& iv : embed_abs_sq_bounds(AlgebraicNumber::generator(K), 30)) EXPECT_TRUE(contains(iv, 2));
}

TEST(EmbedAbsSq, IntervalsNestAsPrecisionGrows) {
    const auto K = NumberField::cyclotomic(12);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_element(K, rng);
        const auto coarse = embed_abs_sq_bounds(a, 10);
        const auto fine = embed_abs_sq_bounds(a, 30);
        ASSERT_EQ(coarse.size(), fine.size());
        for (std::size_t i = 0; i < fine.size(); ++i) {
            EXPECT_LE(coarse[i].lo, fine[i].lo);
            EXPECT_GE(coarse[i].hi, fine[i].hi);
        }
    }
}

TEST(CompareAbsSq, StraddleIsReportedAsUncertainOrExceeds) {
    const auto K = qsqrt2();
    EXPECT_EQ(compare_all_abs_sq(AlgebraicNumber::generator(K), 3), BoundCompare::within);
    EXPECT_EQ(compare_all_abs_sq(AlgebraicNumber::generator(K), Rational(3, 2)), BoundCompare::exceeds);
}

TEST(ReduceModPlace, Examples) {
    const auto Qi = NumberField::cyclotomic(4);
    EXPECT_EQ(reduce_mod_place(AlgebraicNumber::from_rational(Qi, 0), 5, 2), 0u);
    EXPECT_EQ(reduce_mod_place(AlgebraicNumber(Qi, {Rational(1), Rational(1)}), 5, 2), 3u);
    const auto Q = NumberField::rationals();
    EXPECT_EQ(reduce_mod_place(AlgebraicNumber::from_rational(Q, Rational(1, 2)), 7, 1), 4u);
}

TEST(ReduceModPlace, Errors) {
    const auto Qi = NumberField::cyclotomic(4);
    EXPECT_THROW(reduce_mod_place(AlgebraicNumber::from_rational(Qi, Rational(1, 5)), 5, 2), bad_reduction);
    EXPECT_THROW(reduce_mod_place(AlgebraicNumber::from_rational(Qi, 1), 5, 1), invalid_place);
}

TEST(ReduceModPlace, IsARingHomomorphism) {
    const auto K = NumberField::cyclotomic(12);
    const std::uint64_t ell = 13;
    const auto roots = roots_mod(*K, ell);
    ASSERT_EQ(roots.size(), 4u);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto a = random_element(K, rng), b = random_element(K, rng);
        for (auto r : roots) {
            const auto ra = reduce_mod_place(a, ell, r), rb = reduce_mod_place(b, ell, r);
            EXPECT_EQ(reduce_mod_place(a * b, ell, r), mulmod(ra, rb, ell));
            EXPECT_EQ(reduce_mod_place(a + b, ell, r), (ra + rb) % ell);
        }
    }
}

TEST(SplitsCompletely, Examples) {
    EXPECT_TRUE(splits_completely(*NumberField::rationals(), 13));
    EXPECT_TRUE(splits_completely(*NumberField::cyclotomic(4), 5));
    EXPECT_FALSE(splits_completely(*NumberField::cyclotomic(4), 7));
}

TEST(SplitsCompletely, AgreesWithRootSearch) {
    for (const auto& K : {NumberField::cyclotomic(3), NumberField::cyclotomic(5), NumberField::cyclotomic(8), qsqrt2()}) {
        for (auto ell : primes_up_to(100)) {
            const auto& f = K->defining_poly();
            std::size_t roots = 0;
            for (std::uint64_t x = 0; x < ell; ++x) {
                Int acc = 0;
                for (std::size_t k = f.size(); k-- > 0;) acc = (acc * Int(x) + f[k]) % Int(ell);
                roots += acc == 0;
            }
            EXPECT_EQ(splits_completely(*K, ell), roots == K->degree()) << K->label() << " at " << ell;
        }
    }
}

TEST(AlgebraicNumber, RingAxiomsOnRandomInputs) {
    const auto K = NumberField::cyclotomic(5);
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_element(K, rng), b = random_element(K, rng), c = random_element(K, rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), AlgebraicNumber::from_rational(K, 1));
        }
    }
}

TEST(NumberField, RejectsReducibleAndNonMonic) {
    EXPECT_THROW(NumberField::make({Int(-1), Int(0), Int(1)}, "x^2-1"), input_error);
    EXPECT_THROW(NumberField::make({Int(1), Int(0), Int(2)}, "2x^2+1"), input_error);
    EXPECT_EQ(NumberField::cyclotomic(12)->cyclotomic_index(), 12u);
    EXPECT_FALSE(qsqrt2()->cyclotomic_index().has_value());
}

TEST(FiniteField, ExtensionArithmetic) {
    const auto F = FiniteField::make(9);
    EXPECT_EQ(F->p(), 3u);
    EXPECT_EQ(F->k(), 2u);
    for (FiniteField::elem a = 1; a < 9; ++a) {
        EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
        EXPECT_EQ(F->pow(a, 8), 1u);
    }
    EXPECT_THROW(FiniteField::make(6), input_error);
}

TEST(Analytic, NegPowerIsExactForIntegerExponents) {
    const auto e = neg_power_enclosure(3, Rational(2));
    EXPECT_EQ(e.lo, Rational(1, 9));
    EXPECT_EQ(e.hi, Rational(1, 9));
    const auto l = log_enclosure(Rational(10000));
    EXPECT_LT(to_long_double(l.lo), 9.2104L);
    EXPECT_GT(to_long_double(l.hi), 9.2103L);
}
