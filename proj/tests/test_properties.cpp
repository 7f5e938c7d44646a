// Cross-module properties over seeded random ideals.

#include "corpus.hpp"
#include "oracles.hpp"

#include "monalg/derivations.hpp"
#include "monalg/reconstruction.hpp"
#include "monalg/report.hpp"

#include <gtest/gtest.h>

using namespace monalg;

TEST(PipelineProperties, WeightDataDeterminesIdeal) {
    for (const auto& ideal : monalg::testing::make_corpus(500, 41))
        ASSERT_EQ(reconstruct_ideal(weight_data_of(ideal)), ideal) << render_ideal(ideal);
}

TEST(PipelineProperties, RestrictedDataAgreesWithFullWeightFunction) {
    for (const auto& ideal : monalg::testing::make_corpus(500, 41)) {
        const CoSupport c = cosupport(ideal);
        EXPECT_EQ(extend_restricted(weight_data_of(ideal)), weight_function_of(c)) << render_ideal(ideal);
        EXPECT_EQ(reconstruct_cosupport(weight_function_of(c)), c);
    }
}

TEST(PipelineProperties, HigherDimensions) {
    for (const auto& ideal : monalg::testing::make_corpus(60, 43, 5, 6, 3))
        ASSERT_EQ(reconstruct_ideal(weight_data_of(ideal)), ideal) << render_ideal(ideal);
}

TEST(LieProperties, BracketMatrixIsCommutator) {
    auto corpus = monalg::testing::make_corpus(100, 45, 1, 3, 5);
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const MonomialIdeal& ideal = corpus[pick(rng)];
        const CoSupport c = cosupport(ideal);
        const WeightDecomposition wd = weight_decomposition(ideal);
        auto d1 = monalg::testing::random_derivation(wd, rng);
        auto d2 = monalg::testing::random_derivation(wd, rng);
        auto m1 = derivation_matrix(c, d1).entries;
        auto m2 = derivation_matrix(c, d2).entries;
        auto bracket = derivation_matrix(c, lie_bracket(ideal, d1, d2)).entries;
        EXPECT_TRUE(exactly_equal(commutator(m1, m2), bracket)) << to_string(d1) << " " << to_string(d2);
    }
}

TEST(LieProperties, LeibnizRuleOnMatrices) {
    std::mt19937_64 rng(49);
    for (const auto& ideal : monalg::testing::make_corpus(80, 51, 1, 3, 5)) {
        const CoSupport c = cosupport(ideal);
        const WeightDecomposition wd = weight_decomposition(ideal);
        for (int k = 0; k < 4; ++k) {
            auto d = monalg::testing::random_derivation(wd, rng);
            auto m = derivation_matrix(c, d);
            EXPECT_TRUE(oracle::leibniz_holds(ideal, m.basis, m.entries)) << render_ideal(ideal) << " " << to_string(d);
        }
    }
}

TEST(LieProperties, BracketStaysInDecomposition) {
    std::mt19937_64 rng(53);
    for (const auto& ideal : monalg::testing::make_corpus(60, 55, 1, 3, 5)) {
        const WeightDecomposition wd = weight_decomposition(ideal);
        for (int k = 0; k < 5; ++k) {
            auto d1 = monalg::testing::random_derivation(wd, rng);
            auto d2 = monalg::testing::random_derivation(wd, rng);
            auto b = lie_bracket(ideal, d1, d2);
            if (is_trivial_on_quotient(ideal, b)) continue;
            EXPECT_GT(wd.dim_at(b.degree), 0u) << to_string(b);
        }
    }
}

TEST(SymmetryProperties, AnalyzeIsEquivariant) {
    std::mt19937_64 rng(57);
    for (const auto& ideal : monalg::testing::make_corpus(100, 59)) {
        std::vector<std::size_t> image(ideal.dim());
        std::iota(image.begin(), image.end(), 0);
        std::shuffle(image.begin(), image.end(), rng);
        const Permutation sigma(image);
        const MonomialIdeal moved = permuted(ideal, sigma);

        const WeightDecomposition before = weight_decomposition(ideal);
        const WeightDecomposition after = weight_decomposition(moved);
        std::map<ExponentVector, std::size_t> expected, actual;
        for (const auto& [alpha, space] : permuted(before, sigma).spaces) expected[alpha] = space.dim();
        for (const auto& [alpha, space] : after.spaces) actual[alpha] = space.dim();
        EXPECT_EQ(actual, expected);
        EXPECT_EQ(weight_data_of(moved), permuted(weight_data_of(ideal), sigma));
        EXPECT_EQ(aut_weight_report(moved).lie_dim, aut_weight_report(ideal).lie_dim);
        EXPECT_EQ(perm_symmetries(moved).size(), perm_symmetries(ideal).size());
    }
}

TEST(SymmetryProperties, IsoVerdictsAgree) {
    // Ideal-level and weight-data-level checks give the same answer, and a
    // permuted copy is always recognized.
    auto corpus = monalg::testing::make_corpus(120, 61, 2, 3, 3);
    std::mt19937_64 rng(63);
    for (std::size_t k = 0; k + 1 < corpus.size(); k += 2) {
        const MonomialIdeal& a = corpus[k];
        const MonomialIdeal& b = corpus[k + 1];
        EXPECT_EQ(iso_check(a, b).has_value(), weight_data_iso_check(weight_data_of(a), weight_data_of(b)).has_value());

        std::vector<std::size_t> image(a.dim());
        std::iota(image.begin(), image.end(), 0);
        std::shuffle(image.begin(), image.end(), rng);
        const MonomialIdeal moved = permuted(a, Permutation(image));
        auto witness = weight_data_iso_check(weight_data_of(a), weight_data_of(moved));
        ASSERT_TRUE(witness.has_value());
        EXPECT_EQ(permuted(a, *witness), moved);
    }
}
