#include <gtest/gtest.h>

#include <cmath>

#include "schurlab/admissible.hpp"
#include "schurlab/finite_diff.hpp"
#include "schurlab/preserver.hpp"
#include "schurlab/psd.hpp"
#include "schurlab/random.hpp"

using namespace schurlab;

namespace {

using Vec = std::vector<Rational>;

Vec ints(std::initializer_list<long> xs) {
    Vec out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

RingMatrix<Rational> rational_matrix(std::vector<std::vector<long>> rows) {
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) {
        out.emplace_back();
        for (long x : r) out.back().emplace_back(x);
    }
    return RingMatrix<Rational>(out);
}

RingMatrix<double> to_double(const RingMatrix<Rational>& a) {
    RingMatrix<double> out(a.size(), 0.0);
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t k = 0; k < a.size(); ++k) out(j, k) = a(j, k).to_double();
    return out;
}

ExactProfile explicit_profile(const Vec& values, bool tail_zero) {
    ExactProfile p;
    p.values = values;
    p.tail_zero = tail_zero;
    return p;
}

std::vector<std::vector<int>> strict_tuples(int n, int max_entry) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int x = next; x <= max_entry; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

const RealFunction sqrt_fn = [](double x) { return std::sqrt(x); };

}  // namespace

TEST(BuildTestMatrix, Examples) {
    const auto m = build_test_matrix(Rational(0), Rational(1), Vec{Rational(1, 2), Rational(1, 3)});
    EXPECT_EQ(m, RingMatrix<Rational>({{Rational(1, 4), Rational(1, 6)}, {Rational(1, 6), Rational(1, 9)}}));
    const auto flat = build_test_matrix(Rational(2), Rational(0), Vec{Rational(1, 2), Rational(1, 3)});
    EXPECT_TRUE(is_psd_exact(flat).is_psd);
    EXPECT_THROW(build_test_matrix(Rational(0), Rational(-1), Vec{Rational(1, 2)}), InvalidInput);

    SeededRng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const auto u = rng.distinct_unit_rationals(static_cast<std::size_t>(rng.uniform_int(1, 5)));
        const auto a = build_test_matrix(Rational(rng.uniform_int(0, 9), 4), Rational(rng.uniform_int(0, 9), 3), u);
        EXPECT_TRUE(a.is_symmetric());
        EXPECT_TRUE(is_psd_exact(a).is_psd);
    }
}

TEST(TestFamily, EnforcesHypotheses) {
    EXPECT_NO_THROW(TestFamily::make(Rational(1), Rational(1), Vec{Rational(1, 2), Rational(1, 4)}));
    EXPECT_THROW(TestFamily::make(Rational(1), Rational(1), Vec{Rational(1, 2), Rational(1, 2)}), InvalidInput);
    EXPECT_THROW(TestFamily::make(Rational(1), Rational(1), Vec{Rational(1), Rational(1, 2)}), InvalidInput);
    EXPECT_THROW(TestFamily::make(Rational(-1), Rational(1), Vec{Rational(1, 2)}), InvalidInput);
    EXPECT_THROW(TestFamily::make(Rational(1), Rational(0), Vec{Rational(1, 2)}), InvalidInput);
    const auto relaxed = TestFamily::make_relaxed(Rational(1), Rational(1), Vec{Rational(2), Rational(3)});
    EXPECT_TRUE(relaxed.relaxed);
    EXPECT_EQ(TestFamily::geometric_u(3), (Vec{Rational(1, 2), Rational(1, 4), Rational(1, 8)}));
}

TEST(TGrid, UniformInsideHalfOpenRange) {
    const auto grid = t_grid(Rational(1), 200);
    ASSERT_EQ(grid.size(), 200U);
    EXPECT_EQ(grid.front(), Rational(0));
    EXPECT_EQ(grid.back(), Rational(999999, 1000000));
    EXPECT_THROW(t_grid(Rational(1), 0), InvalidInput);
}

TEST(IsPsdExact, Examples) {
    const auto id = is_psd_exact(rational_matrix({{1, 0}, {0, 1}}));
    EXPECT_TRUE(id.is_psd);
    EXPECT_EQ(id.char_coeffs, ints({2, 1}));

    const auto bad = is_psd_exact(rational_matrix({{1, 2}, {2, 1}}));
    EXPECT_FALSE(bad.is_psd);
    EXPECT_EQ(bad.char_coeffs[1], Rational(-3));

    const auto m = rational_matrix({{2, 1}, {1, 2}});
    EXPECT_TRUE(is_psd_exact(m).is_psd);
    EXPECT_EQ(characteristic_polynomial(m), ints({3, -4, 1}));

    EXPECT_THROW(is_psd_exact(rational_matrix({{1, 2}, {0, 1}})), InvalidInput);
}

TEST(IsPsdNumeric, Examples) {
    const auto diag = is_psd_numeric(RingMatrix<double>({{0.0, 0.0}, {0.0, 5.0}}));
    EXPECT_TRUE(diag.is_psd);
    EXPECT_NEAR(*diag.min_eigenvalue, 0.0, 1e-15);
    EXPECT_FALSE(is_psd_numeric(RingMatrix<double>({{-1.0, 0.0}, {0.0, -1.0}})).is_psd);
    EXPECT_THROW(is_psd_numeric(RingMatrix<double>({{1.0, 0.5}, {0.4, 1.0}})), InvalidInput);
    EXPECT_THROW(is_psd_numeric(RingMatrix<double>({{NAN, 0.0}, {0.0, 1.0}})), InvalidInput);
}

TEST(IsPsd, ExactAndNumericAgreeAwayFromTheBoundary) {
    SeededRng rng(67);
    int compared = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 5));
        RingMatrix<Rational> a(n, Rational(0));
        // Gram matrices give PSD cases, plain symmetric fills give the rest.
        if (trial % 2 == 0) {
            RingMatrix<Rational> b(n, Rational(0));
            for (auto j = 0U; j < n; ++j)
                for (auto k = 0U; k < n; ++k) b(j, k) = Rational(rng.uniform_int(-2, 2));
            for (auto j = 0U; j < n; ++j)
                for (auto k = 0U; k < n; ++k)
                    for (auto i = 0U; i < n; ++i) a(j, k) += b(j, i) * b(k, i);
        } else {
            for (auto j = 0U; j < n; ++j)
                for (auto k = j; k < n; ++k) a(j, k) = a(k, j) = Rational(rng.uniform_int(-5, 5));
        }
        const auto exact = is_psd_exact(a);
        if (abs(exact.min_char_coeff()) <= Rational(1, 1000000) && !exact.is_psd) continue;
        if (exact.is_psd && exact.min_char_coeff().is_zero()) {
            // Singular PSD matrices sit on the boundary; only the numeric
            // verdict with tolerance is meaningful there.
            EXPECT_TRUE(is_psd_numeric(to_double(a)).is_psd);
            continue;
        }
        EXPECT_EQ(is_psd_numeric(to_double(a)).is_psd, exact.is_psd);
        ++compared;
    }
    EXPECT_GT(compared, 200);
}

TEST(Admissibility, Examples) {
    const auto e = exp_profile(20);
    EXPECT_TRUE(is_admissible({0, 1}, e, 2));
    EXPECT_FALSE(is_admissible({0, 2}, e, 2));
    EXPECT_EQ(admissibility_witness({0, 2}, e), (std::vector<int>{0, 1}));
    const auto sq = monomial_profile(2);
    for (const auto& t : strict_tuples(2, 6)) EXPECT_TRUE(is_admissible(t, sq, 2));
    EXPECT_THROW(is_admissible({1, 0}, e, 2), InvalidInput);
}

TEST(AdmissibleCharacterize, Examples) {
    const auto e = exp_profile(30);
    const auto c = admissible_characterize(e, 3);
    EXPECT_FALSE(c.all_admissible);
    EXPECT_EQ(c.threshold, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(c.to_string(), "threshold (0,1,2), sum 3");
    EXPECT_TRUE(is_admissible({0, 1, 2}, e, 3));
    EXPECT_FALSE(is_admissible({0, 1, 3}, e, 3));

    const auto two = explicit_profile(ints({1, 0, 3}), true);
    EXPECT_EQ(admissible_characterize(two, 3).to_string(), "ALL_ADMISSIBLE");
    EXPECT_THROW(admissible_characterize(explicit_profile(ints({1, 0, 3}), false), 3), UndecidableProfile);
}

TEST(AdmissibleCharacterize, MatchesBruteForceExhaustively) {
    std::vector<ExactProfile> profiles = {exp_profile(30), explicit_profile(Vec(31, Rational(0)), true),
                                          explicit_profile(ints({0, 1, 0, 0, 2}), true)};
    for (int k = 0; k <= 5; ++k) profiles.push_back(monomial_profile(k));
    // Profiles with 3, 4 and 5 nonzero derivatives at scattered orders.
    profiles.push_back(explicit_profile(ints({0, 2, 0, 1, 0, 0, -1}), true));
    profiles.push_back(explicit_profile(ints({1, 0, 1, 0, 0, 1, 1}), true));
    profiles.push_back(explicit_profile(ints({0, 3, 1, 0, 1, 2, 0, 0, 5}), true));
    for (const auto& p : profiles) {
        for (int n = 1; n <= 4; ++n) {
            const auto cls = admissible_characterize(p, n);
            for (const auto& t : strict_tuples(n, 8))
                EXPECT_EQ(is_admissible(t, p, n), cls.admits(t)) << cls.to_string();
        }
    }
}

TEST(ConclusionCheck, Examples) {
    const auto pass = hl_conclusion_check(exp_profile(10), 3, 0, 3);
    EXPECT_TRUE(pass.pass());
    EXPECT_EQ(pass.orders, (std::vector<int>{0, 1, 2}));

    const auto p = explicit_profile(ints({1, 1, -1, 1}), false);
    const auto fail = hl_conclusion_check(p, 3, 0, 3);
    EXPECT_FALSE(fail.pass());
    EXPECT_EQ(fail.first_failure, 2);
    EXPECT_TRUE(hl_conclusion_check(p, 2, 0, 2).pass());
}

TEST(ConclusionCheck, ReducedCountAndBadArguments) {
    const auto r = hl_conclusion_check(monomial_profile(2), 3, 0, 3);
    EXPECT_TRUE(r.reduced);
    EXPECT_EQ(r.q_effective, 1);
    EXPECT_EQ(r.orders, (std::vector<int>{2}));
    EXPECT_TRUE(r.pass());

    EXPECT_THROW(hl_conclusion_check(exp_profile(5), 3, 1, 3), InvalidInput);  // a = 0 forces p = 0
    EXPECT_THROW(hl_conclusion_check(exp_profile(5), 3, 2, 1), InvalidInput);
    EXPECT_THROW(hl_conclusion_check(exp_profile(5), 3, 0, 4), InvalidInput);

    ExactProfile at_one = polynomial_profile(ints({1, 2, 1}), Rational(1));
    EXPECT_EQ(at_one.values, ints({4, 4, 2}));
    const auto with_p = hl_conclusion_check(at_one, 3, 1, 3);
    EXPECT_EQ(with_p.orders, (std::vector<int>{0, 1, 2}));
    EXPECT_TRUE(with_p.pass());
}

TEST(MaclaurinSignCheck, Examples) {
    const Vec c = ints({1, 1, -1, 1, 1});
    EXPECT_TRUE(maclaurin_sign_check(c, 2, Domain::unbounded).pass);
    const auto fail = maclaurin_sign_check(c, 3, Domain::unbounded);
    EXPECT_FALSE(fail.pass);
    EXPECT_EQ(fail.first_offending_index, 2U);
    const auto first = maclaurin_sign_check(ints({-1, 2, 3}), 1, Domain::bounded);
    EXPECT_FALSE(first.pass);
    EXPECT_EQ(first.first_offending_index, 0U);
}

TEST(MaclaurinSignCheck, ReversalCatchesTrailingNegatives) {
    const Vec c = ints({1, 1, 1, -1});
    EXPECT_TRUE(maclaurin_sign_check(c, 3, Domain::bounded).pass);
    const auto v = maclaurin_sign_check(c, 3, Domain::unbounded);
    EXPECT_FALSE(v.pass);
    EXPECT_TRUE(v.from_reversal);
    EXPECT_EQ(v.first_offending_index, 3U);
    // Trailing zeros do not count as positives above.
    EXPECT_FALSE(maclaurin_sign_check(ints({1, 1, -1, 1, 0, 0}), 2, Domain::unbounded).pass);
}

TEST(MaclaurinSignCheck, NegativeBeforeNPositivesAlwaysFails) {
    SeededRng rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 4));
        Vec c;
        const long positives = rng.uniform_int(0, n - 1);
        for (long i = 0; i < positives; ++i) {
            if (rng.uniform_int(0, 1)) c.emplace_back(0);
            c.emplace_back(rng.uniform_int(1, 5));
        }
        c.emplace_back(-rng.uniform_int(1, 5));
        for (int i = 0; i < 6; ++i) c.emplace_back(rng.uniform_int(1, 5));
        const auto v = maclaurin_sign_check(c, n, Domain::bounded);
        EXPECT_FALSE(v.pass);
        EXPECT_EQ(*v.first_offending_index, c.size() - 7);
    }
}

TEST(FhPredict, Examples) {
    EXPECT_FALSE(fh_predict(0.5, 3));
    EXPECT_TRUE(fh_predict(2.0, 5));
    EXPECT_TRUE(fh_predict(3.5, 5));
    EXPECT_TRUE(fh_predict(0.5, 2));
    EXPECT_THROW(fh_predict(-1.0, 3), InvalidInput);
}

TEST(FiniteDiff, ExpOneSided) {
    const auto p = finite_diff_derivs([](double x) { return std::exp(x); }, 0.0, 4, kDefaultFdStep, Stencil::forward,
                                      0.0);
    for (int k = 0; k <= 4; ++k) EXPECT_NEAR(p.values[static_cast<std::size_t>(k)], 1.0, 1e-6) << k;
}

TEST(FiniteDiff, CubicCentral) {
    const auto p = finite_diff_derivs([](double x) { return x * x * x; }, 1.0, 4);
    const double expected[] = {1, 3, 6, 6, 0};
    for (int k = 0; k <= 4; ++k) EXPECT_NEAR(p.values[static_cast<std::size_t>(k)], expected[k], 1e-6) << k;
    EXPECT_EQ(p.sign_at(4), 0);
    EXPECT_EQ(p.nonzero_orders(), (std::vector<int>{0, 1, 2, 3}));
}

TEST(FiniteDiff, ConstantGivesZero) {
    const auto p = finite_diff_derivs([](double) { return 4.25; }, 0.3, 8);
    for (int k = 1; k <= 8; ++k) EXPECT_LE(std::abs(p.values[static_cast<std::size_t>(k)]), 1e-12);
}

TEST(FiniteDiff, StencilLeavingDomain) {
    EXPECT_THROW(finite_diff_derivs(sqrt_fn, 0.0, 2), InvalidInput);
    EXPECT_THROW(finite_diff_derivs(sqrt_fn, 0.0, 2, kDefaultFdStep, Stencil::central, 0.0), InvalidInput);
    EXPECT_THROW(finite_diff_derivs(sqrt_fn, 1.0, 9), InvalidInput);
    EXPECT_EQ(stencil_weights({-1, 0, 1}, 1), (Vec{Rational(-1, 2), Rational(0), Rational(1, 2)}));
}

TEST(HypothesisScan, SquareHasNoViolations) {
    const auto family = TestFamily::make(Rational(1), Rational(1), TestFamily::geometric_u(3));
    const auto r = hl_hypothesis_scan(ints({0, 0, 1}), family, t_grid(family.epsilon, 50));
    EXPECT_TRUE(r.certified_on_grid());
    EXPECT_EQ(r.psd_method, "charpoly-exact");
}

TEST(HypothesisScan, SqrtFalsifiedAtThreeNotTwo) {
    const Vec u = {Rational(1, 5), Rational(1, 2), Rational(4, 5)};
    const auto grid = t_grid(Rational(1), kDefaultGridSize);
    const auto three = hl_hypothesis_scan(sqrt_fn, TestFamily::make(Rational(1), Rational(1), u), grid);
    EXPECT_FALSE(three.certified_on_grid());
    for (const auto& v : three.violations) EXPECT_LT(v.margin, 0.0);

    const Vec u2 = {Rational(1, 5), Rational(1, 2)};
    EXPECT_TRUE(hl_hypothesis_scan(sqrt_fn, TestFamily::make(Rational(1), Rational(1), u2), grid).certified_on_grid());
}

TEST(HypothesisScan, SqrtFalsifiedOnSampledFamilies) {
    SeededRng rng(73);
    const auto grid = t_grid(Rational(1), kDefaultGridSize);
    for (const Rational& a : {Rational(1, 2), Rational(1), Rational(2)}) {
        for (int i = 0; i < 3; ++i) {
            const auto family = TestFamily::make(a, Rational(1), rng.distinct_unit_rationals(3));
            EXPECT_FALSE(hl_hypothesis_scan(sqrt_fn, family, grid).certified_on_grid()) << a.to_string();
        }
    }
}

TEST(HypothesisScan, NonnegativeCoefficientsNeverViolate) {
    SeededRng rng(79);
    for (int trial = 0; trial < 10; ++trial) {
        Vec poly;
        for (int k = 0; k <= rng.uniform_int(0, 4); ++k) poly.emplace_back(rng.uniform_int(0, 3));
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 4));
        const auto family = TestFamily::make(Rational(rng.uniform_int(0, 4), 2), Rational(2), rng.distinct_unit_rationals(n));
        EXPECT_TRUE(hl_hypothesis_scan(poly, family, t_grid(family.epsilon, 25)).certified_on_grid());
    }
}

TEST(HypothesisScan, ViolationsPersistWhenUIsExtended) {
    // 1 + x - x^2 at a = 1 breaks the conclusion (f''(1) < 0 with n = 3).
    const Vec poly = ints({1, 1, -1});
    Vec u = TestFamily::geometric_u(3);
    const auto grid = t_grid(Rational(1), 40);
    const auto small = hl_hypothesis_scan(poly, TestFamily::make(Rational(1), Rational(1), u), grid);
    ASSERT_FALSE(small.certified_on_grid());
    u.push_back(Rational(1, 16));
    const auto big = hl_hypothesis_scan(poly, TestFamily::make(Rational(1), Rational(1), u), grid);
    for (const auto& v : small.violations) {
        const bool found = std::any_of(big.violations.begin(), big.violations.end(),
                                       [&](const Violation& w) { return w.t == v.t; });
        EXPECT_TRUE(found) << v.t.to_string();
    }
}

TEST(HypothesisScan, ParallelMatchesSerial) {
    const auto family = TestFamily::make(Rational(1), Rational(1), TestFamily::geometric_u(3));
    const auto grid = t_grid(Rational(1), 120);
    const auto p = hl_hypothesis_scan(sqrt_fn, family, grid);
    const auto s = hl_hypothesis_scan_serial(sqrt_fn, family, grid);
    ASSERT_EQ(p.violations.size(), s.violations.size());
    for (std::size_t i = 0; i < p.violations.size(); ++i) {
        EXPECT_EQ(p.violations[i].t, s.violations[i].t);
        EXPECT_EQ(p.violations[i].margin, s.violations[i].margin);
    }
    const auto ep = hl_hypothesis_scan(ints({1, 1, -1}), family, grid);
    const auto es = hl_hypothesis_scan_serial(ints({1, 1, -1}), family, grid);
    ASSERT_EQ(ep.violations.size(), es.violations.size());
    for (std::size_t i = 0; i < ep.violations.size(); ++i) EXPECT_EQ(ep.violations[i].margin_exact, es.violations[i].margin_exact);
}

TEST(HypothesisScan, EvaluationFailureAndBadGrid) {
    const auto family = TestFamily::make(Rational(1), Rational(1), TestFamily::geometric_u(2));
    const RealFunction log_shifted = [](double x) { return std::log(x - 1.0); };
    EXPECT_THROW(hl_hypothesis_scan(log_shifted, family, t_grid(Rational(1), 10)), InvalidInput);
    EXPECT_THROW(hl_hypothesis_scan(ints({1}), family, Vec{Rational(1)}), InvalidInput);
}
