#include <gtest/gtest.h>

#include "artin/matgroup/charpoly_stats.hpp"
#include "artin/matgroup/lp_filtration.hpp"
#include "artin/matgroup/modules.hpp"

#include "support/oracles.hpp"

using namespace artin;
using namespace artin::matgroup;
using arith::FiniteField;
using arith::Rational;

namespace {

FiniteMatrixGroup group(std::uint32_t q, unsigned n, const std::vector<std::vector<long long>>& gens) {
    auto F = FiniteField::make(q);
    std::vector<MatFq> g;
    for (const auto& rows : gens) g.push_back(from_rows(*F, n, rows));
    return FiniteMatrixGroup::close(F, n, g);
}

FiniteMatrixGroup s3(std::uint32_t q) { return group(q, 2, {{0, -1, 1, -1}, {0, 1, 1, 0}}); }
FiniteMatrixGroup c4(std::uint32_t q) { return group(q, 2, {{0, -1, 1, 0}}); }
FiniteMatrixGroup q8_f3() { return group(3, 2, {{0, -1, 1, 0}, {1, 1, 1, -1}}); }

CharPoly cp(std::initializer_list<long long> c, const FiniteField& F) {
    CharPoly out;
    for (auto x : c) out.push_back(F.from_int(x));
    return out;
}

std::vector<FiniteMatrixGroup> corpus() {
    return {s3(5), s3(7), s3(2), c4(3), c4(5), q8_f3(), group(3, 2, {{1, 1, 0, 1}}), group(2, 3, {{0, 0, 1, 1, 0, 1, 0, 1, 0}}),
            group(5, 2, {{2, 0, 0, 3}, {0, 1, 1, 0}}), group(7, 1, {{3}})};
}

}  // namespace

TEST(CloseGroup, Examples) {
    EXPECT_EQ(group(3, 2, {{1, 0, 0, 1}}).order(), 1u);
    EXPECT_EQ(c4(3).order(), 4u);
    EXPECT_EQ(s3(5).order(), 6u);
}

TEST(CloseGroup, Errors) {
    auto F = FiniteField::make(5);
    EXPECT_THROW(FiniteMatrixGroup::close(F, 2, {from_rows(*F, 2, {1, 2, 2, 4})}), invalid_input);
    EXPECT_THROW(FiniteMatrixGroup::close(F, 2, {from_rows(*F, 2, {1, 1, 0, 1}), from_rows(*F, 2, {1, 0, 1, 1})}, 10),
                 enumeration_overflow);
}

TEST(CloseGroup, ClosedUnderProductAndInverse) {
    for (const auto& G : corpus()) {
        for (std::size_t i = 0; i < G.order(); ++i) {
            EXPECT_TRUE(G.contains(inverse(G.field(), G.element(i))));
            for (std::size_t j = 0; j < G.order(); ++j) EXPECT_TRUE(G.contains(oracle::naive_mul(G.field(), G.element(i), G.element(j))));
        }
    }
}

TEST(Histogram, S3OverF5) {
    const auto G = s3(5);
    const auto& F = G.field();
    const auto h = charpoly_histogram(G);
    EXPECT_EQ(h.distinct(), 3u);
    EXPECT_EQ(h.count_of(cp({1, -2, 1}, F)), 1u);
    EXPECT_EQ(h.count_of(cp({1, 0, -1}, F)), 3u);
    EXPECT_EQ(h.count_of(cp({1, 1, 1}, F)), 2u);
    EXPECT_EQ(h.max_count(), 3u);
}

TEST(Histogram, TrivialAndScalarGroups) {
    const auto T = group(5, 3, {{1, 0, 0, 0, 1, 0, 0, 0, 1}});
    const auto ht = charpoly_histogram(T);
    EXPECT_EQ(ht.distinct(), 1u);
    EXPECT_EQ(ht.count_of(cp({1, -3, 3, -1}, T.field())), 1u);
    const auto S = group(5, 1, {{2}});
    const auto hs = charpoly_histogram(S);
    EXPECT_EQ(hs.distinct(), 4u);
    EXPECT_EQ(hs.max_count(), 1u);
}

TEST(Histogram, MatchesLeibnizExpansion) {
    for (const auto& G : corpus()) {
        const auto h = charpoly_histogram(G);
        const auto ref = oracle::charpoly_counts(G);
        EXPECT_EQ(h.counts, ref);
        for (std::size_t i = 0; i < G.order(); ++i) {
            const auto& f = h.per_element[i];
            ASSERT_EQ(f.size(), G.n() + 1u);
            EXPECT_EQ(f[0], 1u);
            const auto d = determinant(G.field(), G.element(i));
            EXPECT_EQ(f[G.n()], G.n() % 2 ? G.field().neg(d) : d);
        }
    }
}

TEST(CProperty, S3Examples) {
    const auto G = s3(5);
    const auto yes = check_C_property(G, Rational(3, 5), 1);
    EXPECT_TRUE(yes.holds);
    EXPECT_EQ(yes.witness_size, 3u);
    EXPECT_FALSE(check_C_property(G, Rational(2, 5), 1).holds);
    const auto all = check_C_property(G, Rational(1, 100), 3);
    EXPECT_TRUE(all.holds);
    EXPECT_EQ(all.witness_size, 6u);
    EXPECT_THROW(check_C_property(G, Rational(1), 1), invalid_input);
    EXPECT_THROW(check_C_property(G, Rational(1, 2), 0), invalid_input);
}

TEST(CProperty, WitnessIsOptimal) {
    for (const auto& G : corpus())
        for (std::size_t N = 1; N <= 4; ++N) {
            const auto r = check_C_property(G, Rational(1, 2), N);
            EXPECT_EQ(r.witness_size, oracle::best_C_witness(G, N));
            for (const Rational& eta : {Rational(1, 10), Rational(1, 3), Rational(1, 2), Rational(4, 5)})
                EXPECT_EQ(check_C_property(G, eta, N).holds, oracle::C_property(G, eta, N));
        }
}

TEST(Inheritance, Examples) {
    const auto G = s3(5);
    const auto c3 = subgroup_from_matrices(G, {from_rows(G.field(), 2, {0, -1, 1, -1})});
    EXPECT_TRUE(check_inheritance(G, whole(G), Rational(1, 2), 1, 1).implication);
    const auto r = check_inheritance(G, c3, Rational(1, 6), 3, 3);
    EXPECT_EQ(r.index, 2u);
    EXPECT_TRUE(r.implication);
    const auto C = c4(3);
    const auto c2 = subgroup_from_matrices(C, {scalar(2, 2)});
    EXPECT_EQ(count(c2), 2u);
    EXPECT_TRUE(check_inheritance(C, c2, Rational(1, 4), 2, 2).implication);
}

TEST(Inheritance, Errors) {
    const auto G = s3(5);
    Subset bad(G.order(), false);
    bad[G.identity_index()] = true;
    bad[(G.identity_index() + 1) % G.order()] = true;
    if (!is_subgroup(G, bad)) {
        EXPECT_THROW(check_inheritance(G, bad, Rational(1, 6), 1, 3), invalid_input);
    }
    EXPECT_THROW(check_inheritance(G, singleton_identity(G), Rational(1, 6), 1, 3), precondition_violation);
    EXPECT_THROW(check_inheritance(G, whole(G), Rational(1, 2), 1, 2), precondition_violation);
}

TEST(Semisimple, Examples) {
    const auto T = group(3, 2, {{1, 0, 0, 1}});
    const auto rt = is_semisimple(T);
    EXPECT_TRUE(rt.semisimple);
    EXPECT_EQ(rt.decomposition.size(), 2u);
    EXPECT_FALSE(is_semisimple(group(3, 2, {{1, 1, 0, 1}})).semisimple);
    const auto rc = is_semisimple(c4(3));
    EXPECT_TRUE(rc.semisimple);
    EXPECT_EQ(rc.decomposition.size(), 1u);
    const auto C = c4(3);
    EXPECT_TRUE(is_irreducible(C.field(), 2, C.generators()));
}

TEST(Semisimple, DecompositionSpansSpace) {
    for (const auto& G : corpus()) {
        const auto r = is_semisimple(G);
        if (!r.semisimple) continue;
        unsigned dim = 0;
        for (const auto& W : r.decomposition) {
            dim += W.dim();
            EXPECT_TRUE(is_irreducible(G.field(), W.dim(), [&] {
                std::vector<MatFq> acts;
                for (const auto& g : G.generators()) acts.push_back(from_dense(restricted_action(G.field(), g, W)));
                return acts;
            }()));
        }
        EXPECT_EQ(dim, G.n());
    }
}

TEST(Wedderburn, Examples) {
    const auto a = wedderburn_rewrite(s3(5));
    EXPECT_EQ(a.r, 1u);
    EXPECT_EQ(a.m, 2u);
    EXPECT_TRUE(a.identity_holds);
    EXPECT_TRUE(a.absolutely_irreducible);

    const auto b = wedderburn_rewrite(c4(3));
    EXPECT_EQ(b.r, 2u);
    EXPECT_EQ(b.m, 1u);
    EXPECT_EQ(b.rewritten_group.order(), 4u);
    EXPECT_EQ(b.extension->q(), 9u);
    EXPECT_TRUE(b.identity_holds);

    const auto c = wedderburn_rewrite(group(2, 3, {{0, 0, 1, 1, 0, 1, 0, 1, 0}}));
    EXPECT_EQ(c.r, 3u);
    EXPECT_EQ(c.m, 1u);
    EXPECT_TRUE(c.identity_holds);

    EXPECT_THROW(wedderburn_rewrite(group(3, 2, {{1, 1, 0, 1}})), not_irreducible);
}

TEST(Wedderburn, CentralizerMatchesExhaustiveCount) {
    for (const auto& G : {s3(5), c4(3), c4(7), q8_f3(), group(2, 3, {{0, 0, 1, 1, 0, 1, 0, 1, 0}})}) {
        const auto w = wedderburn_rewrite(G);
        std::size_t expected = 1;
        for (unsigned i = 0; i < w.r; ++i) expected *= G.field().q();
        EXPECT_EQ(oracle::centralizer_algebra_size(G.field(), G.n(), G.generators()), expected);
        for (std::size_t i = 0; i < G.order(); ++i)
            EXPECT_TRUE(oracle::norm_identity(G.field(), *w.extension, w.r, G.element(i), w.rewritten[i]));
    }
}

TEST(Clifford, Examples) {
    const auto G = s3(7);
    const auto trivial = clifford_decompose(G, singleton_identity(G));
    ASSERT_EQ(trivial.components.size(), 1u);
    EXPECT_EQ(trivial.components[0].dim(), 2u);

    const auto c3 = subgroup_from_matrices(G, {from_rows(G.field(), 2, {0, -1, 1, -1})});
    const auto r = clifford_decompose(G, c3);
    ASSERT_EQ(r.components.size(), 2u);
    EXPECT_EQ(r.components[0].dim(), 1u);
    EXPECT_TRUE(r.permuted_by_G);
    bool swapped = false;
    for (const auto& perm : r.generator_action) swapped |= perm[0] == 1;
    EXPECT_TRUE(swapped);

    const auto Q = q8_f3();
    const auto z = subgroup_from_matrices(Q, {scalar(2, 2)});
    EXPECT_EQ(clifford_decompose(Q, z).components.size(), 1u);

    const auto S = s3(5);
    Subset c2 = subgroup_from_matrices(S, {from_rows(S.field(), 2, {0, 1, 1, 0})});
    EXPECT_THROW(clifford_decompose(S, c2), invalid_input);
}

TEST(LpFiltration, Examples) {
    const auto C = c4(3);
    const auto ok = check_lp_filtration(C, whole(C), whole(C), singleton_identity(C));
    EXPECT_TRUE(ok.accepted) << ok.failed_clause;

    const auto S = s3(5);
    const auto c3 = subgroup_from_matrices(S, {from_rows(S.field(), 2, {0, -1, 1, -1})});
    const auto bad = check_lp_filtration(S, whole(S), c3, c3);
    EXPECT_FALSE(bad.accepted);
    EXPECT_NE(bad.failed_clause.find("p-group"), std::string::npos);
}

TEST(LpFiltration, Catalog) {
    bool found = false;
    for (const auto& e : lie_type_catalog(5))
        if (e.order == 60) found = true;
    EXPECT_TRUE(found);
    EXPECT_EQ(sl_order(2, 5), 120);
}

TEST(Irr1, Examples) {
    const auto r = check_irr1_bound(c4(5), Rational(1, 8), 4, Rational(4));
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.abelian_order, 4u);
    const auto D = group(17, 2, {{3, 0, 0, 1}});
    const auto d = check_irr1_bound(D, Rational(1, 2), charpoly_histogram(D).distinct(), Rational(1));
    EXPECT_EQ(D.order(), 16u);
    EXPECT_TRUE(d.premise);
    EXPECT_EQ(d.witness_in_A, 16u);
    EXPECT_TRUE(d.ok);
    EXPECT_THROW(check_irr1_bound(s3(2), Rational(1, 8), 1, Rational(4)), precondition_violation);
}

TEST(CorTrivial, SolvableSemisimpleHasTrivialOp) {
    for (const auto& G : corpus()) {
        if (!is_solvable(G) || !is_semisimple(G).semisimple || G.field().p() <= G.order()) continue;
        EXPECT_EQ(count(largest_normal_p_subgroup(G)), 1u);
    }
}
