#include <leibniz/catalog.hpp>
#include <leibniz/error.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace leibniz;
namespace cat = leibniz::catalog;

TEST(Catalog, Sl2Table) {
    const auto s = cat::sl2();
    EXPECT_EQ(s.algebra.basis_names(), (std::vector<std::string>{"e", "f", "h"}));
    EXPECT_EQ(oracle::c(s.algebra, 0, 2, 0), 2);
    EXPECT_EQ(oracle::c(s.algebra, 0, 1, 2), 1);
    EXPECT_EQ(oracle::c(s.algebra, 2, 1, 1), 2);
    EXPECT_EQ(oracle::c(s.algebra, 2, 0, 0), -2);
    EXPECT_EQ(oracle::c(s.algebra, 1, 0, 2), -1);
    EXPECT_EQ(oracle::c(s.algebra, 1, 2, 1), -2);
    EXPECT_EQ(s.algebra.products().size(), 6u);
    ASSERT_TRUE(s.levi.has_value());
    EXPECT_TRUE(s.levi->i_indices.empty());
}

TEST(Catalog, SimpleFamilyFollowsFormula) {
    for (long m = 2; m <= 8; ++m) {
        const auto e = cat::simple_sl2_leibniz(m);
        const auto& alg = e.algebra;
        ASSERT_EQ(alg.dim(), static_cast<std::size_t>(m + 4));
        EXPECT_TRUE(e.certified);
        for (long k = 0; k <= m; ++k) {
            const std::size_t xk = 3 + static_cast<std::size_t>(k);
            EXPECT_EQ(alg.basis_names()[xk], "x_" + std::to_string(k));
            EXPECT_EQ(oracle::c(alg, xk, 2, xk), m - 2 * k);
            if (k < m) EXPECT_EQ(oracle::c(alg, xk, 1, xk + 1), 1);
            if (k > 0) EXPECT_EQ(oracle::c(alg, xk, 0, xk - 1), -k * (m + 1 - k));
            for (std::size_t g = 0; g < alg.dim(); ++g) EXPECT_TRUE(alg.structure(g, xk).empty());
        }
        EXPECT_TRUE(alg.structure(3 + static_cast<std::size_t>(m), 1).empty());
        EXPECT_TRUE(alg.structure(3, 0).empty());
        EXPECT_TRUE(leibniz_check(alg).empty()) << m;
        EXPECT_NO_THROW(validate_levi(alg, *e.levi));
    }
}

TEST(Catalog, SimpleFamilyParameterRange) {
    EXPECT_THROW(cat::simple_sl2_leibniz(1), Error);
    EXPECT_THROW(cat::simple_sl2_leibniz(0, true), Error);
    const auto forced = cat::simple_sl2_leibniz(1, true);
    EXPECT_FALSE(forced.certified);
    EXPECT_EQ(forced.algebra.dim(), 5u);
    EXPECT_TRUE(leibniz_check(forced.algebra).empty());
}

TEST(Catalog, PairFamily) {
    for (long m = 1; m <= 5; ++m) {
        const auto p = cat::semisimple_pair(m);
        ASSERT_EQ(p.algebra.dim(), static_cast<std::size_t>(2 * (m + 4)));
        EXPECT_TRUE(leibniz_check(p.algebra).empty()) << m;
        EXPECT_NO_THROW(validate_levi(p.algebra, *p.levi));
        EXPECT_EQ(p.levi->sl2_triples.size(), 2u);
        const std::size_t x1 = 6, x2 = 7 + static_cast<std::size_t>(m);
        EXPECT_EQ(p.algebra.basis_names()[x1], "x_0^1");
        EXPECT_EQ(p.algebra.basis_names()[x2], "x_0^2");
        EXPECT_EQ(oracle::c(p.algebra, x1, 3, x2), 1);
        EXPECT_EQ(oracle::c(p.algebra, x2, 5, x2), 1);
        EXPECT_EQ(oracle::c(p.algebra, x1, 5, x1), -1);
        EXPECT_EQ(oracle::c(p.algebra, x2, 4, x1), -1);
    }
    EXPECT_EQ(cat::semisimple_pair(3).algebra.dim(), 14u);
    EXPECT_THROW(cat::semisimple_pair(0), Error);
}

TEST(Catalog, SolvableAndSums) {
    const auto s = cat::two_dim_solvable();
    EXPECT_FALSE(s.levi.has_value());
    EXPECT_EQ(oracle::c(s.algebra, 0, 0, 1), 1);
    EXPECT_EQ(s.algebra.products().size(), 1u);

    const auto sum = cat::build({cat::Family::DirectSum, 0,
                                 {{cat::Family::SimpleSl2Leibniz, 2, {}}, {cat::Family::SimpleSl2Leibniz, 3, {}}}});
    EXPECT_EQ(sum.algebra.dim(), 13u);
    ASSERT_TRUE(sum.levi.has_value());
    EXPECT_EQ(sum.levi->g_indices.size(), 6u);
    EXPECT_EQ(sum.levi->sl2_triples.size(), 2u);
    EXPECT_TRUE(leibniz_check(sum.algebra).empty());
    EXPECT_THROW(cat::build({cat::Family::DirectSum, 0, {}}), Error);

    const auto no_levi = cat::direct_sum_sample({{cat::Family::Sl2, 0, {}}, {cat::Family::TwoDimSolvable, 0, {}}});
    EXPECT_FALSE(no_levi.levi.has_value());
}

TEST(Catalog, FamilyKeys) {
    EXPECT_EQ(cat::family_from_string("sl2"), cat::Family::Sl2);
    EXPECT_EQ(cat::family_from_string("simple"), cat::Family::SimpleSl2Leibniz);
    EXPECT_EQ(cat::family_from_string("pair"), cat::Family::SemisimplePair);
    EXPECT_EQ(cat::family_from_string("solvable2"), cat::Family::TwoDimSolvable);
    EXPECT_EQ(cat::family_from_string("sum"), cat::Family::DirectSum);
    EXPECT_FALSE(cat::family_from_string("e8").has_value());
}
