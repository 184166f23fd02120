#include <leibniz/catalog.hpp>
#include <leibniz/error.hpp>
#include <leibniz/sl2.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace leibniz;
namespace cat = leibniz::catalog;

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> v;
    for (std::size_t i = from; i < to; ++i) v.push_back(i);
    return v;
}

// Invariance of a subspace under x -> [x, b_g] computed from raw constants.
bool invariant_under(const Algebra& alg, const Subspace& s, std::size_t g) {
    for (const auto& v : s.vectors()) {
        Vector image(alg.dim(), Rational(0));
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t k = 0; k < alg.dim(); ++k) image[k] += v[i] * oracle::c(alg, i, g, k);
        if (!s.contains(image)) return false;
    }
    return true;
}

void expect_valid_decomposition(const Algebra& alg, const Subspace& module, const std::array<std::size_t, 3>& efh,
                                const ModuleDecomposition& d) {
    Subspace total(alg.dim());
    std::size_t dims = 0;
    for (const auto& c : d.components) {
        EXPECT_EQ(c.space.dim(), static_cast<std::size_t>(c.highest_weight + 1));
        for (auto g : efh) EXPECT_TRUE(invariant_under(alg, c.space, g));
        total = sum(total, c.space);
        dims += c.space.dim();
    }
    EXPECT_EQ(total, module);
    EXPECT_EQ(dims, module.dim());
    for (std::size_t i = 1; i < d.components.size(); ++i)
        EXPECT_GE(d.components[i - 1].highest_weight, d.components[i].highest_weight);
}

}  // namespace

TEST(Sl2Triple, CatalogTriplesHold) {
    const auto s = cat::sl2();
    EXPECT_TRUE(check_sl2_triple(s.algebra, Sl2Triple::from_indices(3, {0, 1, 2})).empty());
    const auto p = cat::semisimple_pair(2);
    for (const auto& t : p.levi->sl2_triples)
        EXPECT_TRUE(check_sl2_triple(p.algebra, *p.levi, Sl2Triple::from_indices(p.algebra.dim(), t)).empty());
}

TEST(Sl2Triple, WrongOrderReportsFailures) {
    const auto s = cat::sl2();
    // Swapping e and f flips every sign.
    EXPECT_EQ(check_sl2_triple(s.algebra, Sl2Triple::from_indices(3, {1, 0, 2})).size(), 6u);
    // Scaling h breaks only the relations that produce h.
    auto t = Sl2Triple::from_indices(3, {0, 1, 2});
    t.h = Rational(2) * t.h;
    EXPECT_FALSE(check_sl2_triple(s.algebra, t).empty());
}

TEST(Sl2Triple, SupportOutsideGIsRejected) {
    const auto e = cat::simple_sl2_leibniz(2);
    auto t = Sl2Triple::from_indices(6, {0, 1, 2});
    t.e[3] = 1;  // e + x_0
    EXPECT_FALSE(check_sl2_triple(e.algebra, *e.levi, t).empty());
}

TEST(RestrictedAction, HActsDiagonallyOnSimpleFamily) {
    for (long m : {2, 3, 5}) {
        const auto e = cat::simple_sl2_leibniz(m);
        const std::size_t n = e.algebra.dim();
        const auto ideal = Subspace::coordinate(n, range(3, n));
        const auto h = restricted_right_action(e.algebra, ideal, oracle::basis_vec(n, 2));
        ASSERT_EQ(h.rows(), static_cast<std::size_t>(m + 1));
        for (long k = 0; k <= m; ++k)
            for (long j = 0; j <= m; ++j) EXPECT_EQ(h(k, j), k == j ? Rational(m - 2 * k) : Rational(0));

        // f lowers: x_k -> x_{k+1}
        const auto f = restricted_right_action(e.algebra, ideal, oracle::basis_vec(n, 1));
        for (long k = 0; k < m; ++k) EXPECT_EQ(f(k + 1, k), 1);
    }
}

TEST(RestrictedAction, RejectsNonInvariantSubspace) {
    const auto e = cat::simple_sl2_leibniz(3);
    const auto top = Subspace::coordinate(7, {3});
    EXPECT_THROW(restricted_right_action(e.algebra, top, oracle::basis_vec(7, 1)), Error);
}

TEST(WeightSpaces, SimpleFamily) {
    for (long m : {2, 4, 7}) {
        const auto e = cat::simple_sl2_leibniz(m);
        const std::size_t n = e.algebra.dim();
        const auto w = weight_decomposition(e.algebra, Subspace::coordinate(n, range(3, n)),
                                            Sl2Triple::from_indices(n, {0, 1, 2}));
        EXPECT_FALSE(w.incomplete);
        ASSERT_EQ(w.spaces.size(), static_cast<std::size_t>(m + 1));
        for (long k = 0; k <= m; ++k) {
            const auto& s = w.spaces[static_cast<std::size_t>(m - k)];
            EXPECT_EQ(s.weight, m - 2 * k);
            EXPECT_EQ(s.space, Subspace::coordinate(n, {3 + static_cast<std::size_t>(k)}));
        }
    }
}

TEST(HighestWeight, SimpleFamilyTopVector) {
    const auto e = cat::simple_sl2_leibniz(4);
    const auto hw = highest_weight_vectors(e.algebra, Subspace::coordinate(8, range(3, 8)),
                                           Sl2Triple::from_indices(8, {0, 1, 2}));
    ASSERT_EQ(hw.size(), 1u);
    EXPECT_EQ(hw[0].weight, 4);
    EXPECT_EQ(Subspace::span(8, {hw[0].vector}), Subspace::coordinate(8, {3}));
}

TEST(Decomposition, AdjointSl2IsIrreducible) {
    const auto s = cat::sl2();
    const auto d = irreducible_decomposition_sl2(s.algebra, Subspace::full(3), Sl2Triple::from_indices(3, {0, 1, 2}));
    ASSERT_EQ(d.components.size(), 1u);
    EXPECT_EQ(d.components[0].highest_weight, 2);
    expect_valid_decomposition(s.algebra, Subspace::full(3), {0, 1, 2}, d);
}

TEST(Decomposition, SimpleFamilyIsOneComponent) {
    for (long m = 2; m <= 8; ++m) {
        const auto e = cat::simple_sl2_leibniz(m);
        const std::size_t n = e.algebra.dim();
        const auto ideal = Subspace::coordinate(n, range(3, n));
        const auto d = irreducible_decomposition_sl2(e.algebra, ideal, Sl2Triple::from_indices(n, {0, 1, 2}));
        ASSERT_EQ(d.components.size(), 1u);
        EXPECT_EQ(d.components[0].highest_weight, m);
        expect_valid_decomposition(e.algebra, ideal, {0, 1, 2}, d);
    }
}

TEST(Decomposition, PairUnderEachCopy) {
    for (long m = 1; m <= 4; ++m) {
        const auto p = cat::semisimple_pair(m);
        const std::size_t n = p.algebra.dim();
        const auto ideal = Subspace::coordinate(n, range(6, n));

        const auto first = irreducible_decomposition_sl2(p.algebra, ideal, Sl2Triple::from_indices(n, {0, 1, 2}));
        ASSERT_EQ(first.components.size(), 2u);
        for (const auto& c : first.components) EXPECT_EQ(c.highest_weight, m);
        expect_valid_decomposition(p.algebra, ideal, {0, 1, 2}, first);

        const auto second = irreducible_decomposition_sl2(p.algebra, ideal, Sl2Triple::from_indices(n, {3, 4, 5}));
        ASSERT_EQ(second.components.size(), static_cast<std::size_t>(m + 1));
        for (const auto& c : second.components) EXPECT_EQ(c.highest_weight, 1);
        expect_valid_decomposition(p.algebra, ideal, {3, 4, 5}, second);
    }
}

TEST(Decomposition, TrivialModuleSplitsIntoLines) {
    // x-vectors of a second summand are killed by the first sl2.
    const auto s = cat::direct_sum_sample({{cat::Family::SimpleSl2Leibniz, 2, {}}, {cat::Family::SimpleSl2Leibniz, 3, {}}});
    const auto other = Subspace::coordinate(13, range(9, 13));
    const auto d = irreducible_decomposition_sl2(s.algebra, other, Sl2Triple::from_indices(13, {0, 1, 2}));
    ASSERT_EQ(d.components.size(), 4u);
    for (const auto& c : d.components) EXPECT_EQ(c.highest_weight, 0);
}

TEST(ConditionsAbc, PairFamilySatisfiesAll) {
    for (long m = 1; m <= 5; ++m) {
        const auto p = cat::semisimple_pair(m);
        const auto r = verify_conditions_abc(p.algebra, *p.levi);
        EXPECT_TRUE(r.a) << m;
        EXPECT_TRUE(r.b) << m;
        EXPECT_TRUE(r.c) << m;
    }
}

TEST(ConditionsAbc, DirectSumFailsModuleConditions) {
    const auto s = cat::direct_sum_sample({{cat::Family::SimpleSl2Leibniz, 2, {}}, {cat::Family::SimpleSl2Leibniz, 3, {}}});
    const auto r = verify_conditions_abc(s.algebra, *s.levi);
    EXPECT_TRUE(r.a);
    EXPECT_FALSE(r.b);
    EXPECT_FALSE(r.all());
    EXPECT_FALSE(r.notes.empty());
}

TEST(ConditionsAbc, NeedsTwoTriples) {
    const auto e = cat::simple_sl2_leibniz(3);
    EXPECT_THROW(verify_conditions_abc(e.algebra, *e.levi), Error);
}
