#include <gtest/gtest.h>

#include "schurlab/determinant.hpp"
#include "schurlab/random.hpp"
#include "schurlab/symmetric.hpp"
#include "support/oracles.hpp"

using namespace schurlab;

namespace {

MultiPoly var(std::size_t vars, std::size_t i) { return MultiPoly::variable(vars, i - 1); }

std::vector<std::vector<int>> parts_of(const std::vector<PartitionTuple>& ps) {
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) out.push_back(p.parts());
    return out;
}

Rational at_ones(const MultiPoly& p) {
    std::vector<Rational> ones(p.num_vars(), Rational(1));
    return evaluate(p, std::span<const Rational>(ones), Rational(0));
}

}  // namespace

TEST(PartitionTuple, StoresDecreasing) {
    const PartitionTuple p({0, 3, 1});
    EXPECT_EQ(p.parts(), (std::vector<int>{3, 1, 0}));
    EXPECT_EQ(p.increasing(), (std::vector<int>{0, 1, 3}));
    EXPECT_TRUE(p.is_strict());
    EXPECT_FALSE(PartitionTuple({2, 2}).is_strict());
    EXPECT_EQ(p.shape(), (std::vector<int>{1, 0, 0}));
    EXPECT_EQ(PartitionTuple::staircase(3).parts(), (std::vector<int>{2, 1, 0}));
    EXPECT_THROW(PartitionTuple({-1, 2}), InvalidInput);
}

TEST(EnumeratePartitionsDistinct, Examples) {
    EXPECT_EQ(parts_of(enumerate_partitions_distinct(3, 2)), (std::vector<std::vector<int>>{{3, 0}, {2, 1}}));
    EXPECT_EQ(parts_of(enumerate_partitions_distinct(1, 2)), (std::vector<std::vector<int>>{{1, 0}}));
    EXPECT_TRUE(enumerate_partitions_distinct(2, 3).empty());
}

TEST(EnumeratePartitionsDistinct, MatchesBruteForceFilter) {
    for (int n = 1; n <= 5; ++n) {
        for (int total = 0; total <= 16; ++total) {
            const auto got = enumerate_partitions_distinct(total, n);
            EXPECT_EQ(parts_of(got), oracle::strict_partitions_brute(total, n)) << "n=" << n << " M=" << total;
            EXPECT_EQ(got.empty(), total < n * (n - 1) / 2);
        }
    }
}

TEST(EnumerateSsyt, Examples) {
    const auto single = enumerate_ssyt({1}, 2);
    ASSERT_EQ(single.size(), 2U);
    EXPECT_EQ(single[0].rows, (std::vector<std::vector<int>>{{1}}));
    EXPECT_EQ(single[1].rows, (std::vector<std::vector<int>>{{2}}));

    const auto column = enumerate_ssyt({1, 1}, 2);
    ASSERT_EQ(column.size(), 1U);
    EXPECT_EQ(column[0].rows, (std::vector<std::vector<int>>{{1}, {2}}));

    const auto empty = enumerate_ssyt({}, 3);
    ASSERT_EQ(empty.size(), 1U);
    EXPECT_TRUE(empty[0].rows.empty());
}

TEST(EnumerateSsyt, CountsMatchBruteForceAndAreColumnStrict) {
    const std::vector<std::vector<int>> shapes = {{2}, {2, 1}, {3, 1}, {2, 2}, {3, 2, 1}, {1, 1, 1}, {4}};
    for (const auto& shape : shapes) {
        for (int m = 1; m <= 4; ++m) {
            const auto ts = enumerate_ssyt(shape, m);
            EXPECT_EQ(static_cast<long>(ts.size()), oracle::count_fillings_brute(shape, m));
            for (std::size_t i = 0; i < ts.size(); ++i) {
                EXPECT_TRUE(ts[i].is_column_strict(m));
                if (i > 0) EXPECT_LT(ts[i - 1], ts[i]);
            }
        }
    }
}

TEST(TableauWeight, Examples) {
    Tableau row{{3}, {{1, 1, 2}}};
    EXPECT_EQ(tableau_weight(row, 2), var(2, 1) * var(2, 1) * var(2, 2));
    EXPECT_EQ(tableau_weight(Tableau{}, 2), MultiPoly::constant(2, Rational(1)));
    Tableau col{{1, 1}, {{1}, {2}}};
    EXPECT_EQ(tableau_weight(col, 3), var(3, 1) * var(3, 2));
    EXPECT_THROW(tableau_weight(Tableau{{1}, {{4}}}, 3), InvalidInput);
}

TEST(SchurTableaux, Examples) {
    EXPECT_EQ(schur_tableaux(PartitionTuple({1, 0}), 2).value.to_string(), "1");
    EXPECT_EQ(schur_tableaux(PartitionTuple({2, 0}), 2).value.to_string(), "u1 + u2");
    EXPECT_TRUE(schur_tableaux(PartitionTuple({2, 2}), 2).value.is_zero());
}

TEST(SchurBialternant, Examples) {
    EXPECT_EQ(schur_bialternant(PartitionTuple({2, 1}), 2).value.to_string(), "u1*u2");
    EXPECT_EQ(schur_bialternant(PartitionTuple({3, 0}), 2).value.to_string(), "u1^2 + u1*u2 + u2^2");
    EXPECT_EQ(schur_bialternant(PartitionTuple({1, 0}), 2).value.to_string(), "1");
    EXPECT_EQ(schur_bialternant(PartitionTuple({1, 0}), 2).method, SchurMethod::bialternant);
    EXPECT_THROW(schur_bialternant(PartitionTuple({2, 1}), 3), InvalidInput);
}

TEST(SchurDualConstruction, AgreeOnAllSmallStrictTuples) {
    int cases = 0;
    for (int n = 1; n <= 4; ++n) {
        for (int total = 0; total <= 12; ++total) {
            for (const auto& m : enumerate_partitions_distinct(total, n)) {
                const MultiPoly t = schur_tableaux(m, static_cast<std::size_t>(n)).value;
                EXPECT_EQ(t, schur_bialternant(m, static_cast<std::size_t>(n)).value) << m.to_string();
                // Symmetric under every transposition.
                for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
                    for (std::size_t j = i + 1; j < static_cast<std::size_t>(n); ++j)
                        EXPECT_EQ(t.swap_variables(i, j), t);
                // Specialising at ones counts the tableaux.
                const auto ts = enumerate_ssyt(m.shape(), n);
                EXPECT_EQ(at_ones(t), Rational(static_cast<long>(ts.size())));
                ++cases;
            }
        }
    }
    EXPECT_GT(cases, 100);
}

TEST(Vandermonde, Examples) {
    const std::vector<Rational> u = {Rational(1), Rational(2), Rational(3)};
    EXPECT_EQ(vandermonde(std::span<const Rational>(u)), Rational(2));

    const auto sym = symbolic_vector(2, 0, 2);
    EXPECT_EQ(vandermonde(std::span<const MultiPoly>(sym)), var(2, 2) - var(2, 1));

    const auto sym3 = symbolic_vector(3, 0, 3);
    const auto moment = moment_matrix(std::span<const MultiPoly>(sym3));
    EXPECT_EQ(det_ring(moment), vandermonde(std::span<const MultiPoly>(sym3)));
    EXPECT_EQ(oracle::det_leibniz(moment), vandermonde(std::span<const MultiPoly>(sym3)));
}

TEST(Vandermonde, ZeroExactlyOnRepeatedCoordinates) {
    SeededRng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(2, 5));
        std::vector<Rational> u;
        bool repeated = false;
        for (std::size_t i = 0; i < n; ++i) {
            u.emplace_back(rng.uniform_int(-3, 3), rng.uniform_int(1, 2));
            for (std::size_t j = 0; j < i; ++j) repeated = repeated || u[j] == u[i];
        }
        EXPECT_EQ(vandermonde(std::span<const Rational>(u)).is_zero(), repeated);
    }
}

TEST(Determinant, Examples) {
    const auto s = symbolic_vector(4, 0, 4);
    RingMatrix<MultiPoly> m({{s[0], s[1]}, {s[2], s[3]}});
    EXPECT_EQ(det_ring(m), s[0] * s[3] - s[1] * s[2]);

    const std::vector<Rational> u = {Rational(1), Rational(2)}, v = {Rational(1), Rational(3)};
    RingMatrix<Rational> rank_one({{u[0] * v[0], u[0] * v[1]}, {u[1] * v[0], u[1] * v[1]}});
    EXPECT_TRUE(det_ring(rank_one).is_zero());

    EXPECT_THROW(det_ring(RingMatrix<Rational>(7, Rational(1))), BoundExceeded);
}

TEST(Determinant, BareissLaplaceLeibnizAgree) {
    SeededRng rng(29);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 6));
        RingMatrix<Rational> a(n, Rational(0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                // sparse rows exercise Bareiss pivoting
                a(j, k) = rng.uniform_int(0, 3) == 0 ? Rational(0) : Rational(rng.uniform_int(-5, 5), rng.uniform_int(1, 4));
        const Rational expected = oracle::det_leibniz(a);
        EXPECT_EQ(det_bareiss(a), expected);
        EXPECT_EQ(det_laplace(a), expected);
    }
}
