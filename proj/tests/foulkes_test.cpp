#include <gtest/gtest.h>

#include "ramsum/expected.hpp"
#include "ramsum/foulkes.hpp"

using namespace ramsum;

namespace {

ExpansionCache& cache() {
    static ExpansionCache c;
    return c;
}

bool square_free(Int n) {
    for (Int p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0) return false;
    return true;
}

Partition hook(int arm, int ones) {
    std::vector<int> parts{arm};
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(parts));
}

}  // namespace

TEST(FoulkesCharacters, Examples) {
    EXPECT_EQ(foulkes_schur_multiplicities(4, 4, cache()).coefficient(Partition{2, 2}), 1);
    EXPECT_GE(foulkes_schur_multiplicities(6, 6, cache()).coefficient(Partition{2, 2, 2}), 1);
    EXPECT_GE(foulkes_schur_multiplicities(6, 2, cache()).coefficient(Partition{2, 2, 2}), 1);
    for (int n = 1; n <= 14; ++n) EXPECT_EQ(foulkes_schur_multiplicities(n, n, cache()).coefficient(Partition{n}), 1);
    EXPECT_THROW(foulkes_schur_multiplicities(4, 5, cache()), domain_error);
    EXPECT_THROW(foulkes_schur_multiplicities(4, 0, cache()), domain_error);
}

TEST(FoulkesCharacters, DependOnlyOnGcd) {
    for (int n = 1; n <= 12; ++n)
        for (int r = 1; r <= n; ++r)
            ASSERT_EQ(foulkes_schur_multiplicities(n, r, cache()),
                      foulkes_schur_multiplicities(n, static_cast<int>(canonical_foulkes_index(n, r)), cache()));
}

TEST(FoulkesCharacters, DegreeIsNOverCyclicOrder) {
    // Summing f^lambda times multiplicity gives (n-1)!.
    for (int n = 1; n <= 12; ++n)
        for (int r = 1; r <= n; ++r) {
            const auto e = foulkes_schur_multiplicities(n, r, cache());
            BigInt dim = 0;
            for (const auto& [p, c] : e.terms()) dim += c * count_syt(p);
            ASSERT_EQ(dim, factorial(static_cast<unsigned>(n - 1)));
        }
}

TEST(YCoefficient, Examples) {
    for (Int q : {2, 3, 5, 7, 11, 13}) EXPECT_EQ(y_coefficient(q, q, 1), q);
    EXPECT_EQ(y_coefficient(9, 1, 1), 3);
    EXPECT_EQ(y_coefficient(4, 4, 1), 0);
    EXPECT_THROW(y_coefficient(12, 5, 1), domain_error);
}

TEST(YCoefficient, FourEvaluatesDirectly) {
    for (unsigned u = 1; u <= 8; ++u) {
        EXPECT_EQ(y_coefficient(4, 1, u), 2);
        EXPECT_EQ(y_coefficient(4, 2, u), 2);
        EXPECT_EQ(y_coefficient(4, 4, u), 0);
    }
    EXPECT_EQ(y_coefficient(4, 1, 0), 3);
    EXPECT_EQ(y_coefficient(4, 2, 0), 1);
    EXPECT_EQ(y_coefficient(4, 4, 0), 0);
}

TEST(YCoefficientStructural, Examples) {
    EXPECT_EQ(y_coefficient_structural(27, 9, 1).value, 27);
    EXPECT_EQ(y_coefficient_structural(9, 3, 1).value, 6);
    EXPECT_EQ(y_coefficient_structural(12, 12, 1).value, 0);
    EXPECT_FALSE(y_coefficient_structural(12, 12, 1).used_fallback);
    EXPECT_TRUE(y_coefficient_structural(8, 2, 2).used_fallback);
    EXPECT_FALSE(y_coefficient_structural(30, 6, 7).used_fallback);
}

TEST(YCoefficientStructural, MatchesDirectSum) {
    for (Int n = 1; n <= 1000; ++n)
        for (Int k : divisors(n))
            for (unsigned u : {0u, 1u}) {
                const auto s = y_coefficient_structural(n, k, u);
                ASSERT_FALSE(s.used_fallback);
                ASSERT_EQ(s.value, y_coefficient(n, k, u)) << n << "," << k << " u=" << u;
            }
    for (Int n = 1; n <= 300; ++n)
        for (Int k : divisors(n))
            for (unsigned u = 2; u <= 5; ++u) ASSERT_EQ(y_coefficient_structural(n, k, u).value, y_coefficient(n, k, u));
}

TEST(YCoefficient, ZeroPowerGivesRowSums) {
    for (Int n = 1; n <= 500; ++n) {
        BigInt total = 0;
        for (Int k : divisors(n)) {
            ASSERT_EQ(y_coefficient(n, k, 0), row_sum_direct(n, k));
            total += y_coefficient(n, k, 0);
        }
        ASSERT_EQ(total, n);
        ASSERT_EQ(rnu_ell_expansion(n, 0).total(), n);
    }
}

TEST(YCoefficient, NonnegativeForUZeroAndOne) {
    for (Int n = 1; n <= 500; ++n)
        for (Int k : divisors(n)) {
            ASSERT_GE(y_coefficient(n, k, 0), 0);
            ASSERT_GE(y_coefficient(n, k, 1), 0);
        }
}

TEST(RnuEll, Examples) {
    const auto e8 = rnu_ell_expansion(8, 2);
    EXPECT_EQ(e8.coefficient(8), 6);
    EXPECT_EQ(e8.coefficient(4), 6);
    EXPECT_EQ(e8.coefficient(2), -4);
    EXPECT_EQ(e8.coefficient(1), 0);
    EXPECT_EQ(e8.coefficient(6), -4);  // (8, 6) = 2
    EXPECT_FALSE(e8.is_nonnegative());

    const auto e9 = rnu_ell_expansion(9, 2);
    EXPECT_EQ(e9.coeffs, (std::vector<std::pair<Int, BigInt>>{{1, -6}, {3, 10}, {9, 5}}));

    for (Int n = 1; n <= 200; ++n) {
        if (!square_free(n)) continue;
        for (const auto& [k, c] : rnu_ell_expansion(n, 1).coeffs) ASSERT_EQ(c, k == 1 ? n : 0) << n;
    }
}

TEST(RnuSchur, SmallDegreeExpansions) {
    const auto phi4 = rnu_schur_expansion(4, 0, cache());
    SchurExpansion want(4);
    want.add({4}, 3);
    want.add({3, 1}, 1);
    want.add({2, 2}, 4);
    want.add({2, 1, 1}, 3);
    want.add({1, 1, 1, 1}, 1);
    EXPECT_EQ(phi4, want);
    EXPECT_EQ(rnu_schur_expansion(6, 0, cache()).coefficient(Partition{5, 1}), 2);
    EXPECT_EQ(rnu_schur_expansion(6, 0, cache()).coefficient(Partition{3, 2, 1}), 14);

    SchurExpansion r93 = *power_sum_rectangle_expansion(9, 1, cache());
    r93.add_scaled(*power_sum_rectangle_expansion(9, 3, cache()), 8);
    EXPECT_EQ(rnu_schur_expansion(9, 3, cache()), r93);

    SchurExpansion r1(1);
    r1.add({1}, 1);
    EXPECT_EQ(rnu_schur_expansion(1, 5, cache()), r1);
}

TEST(RnuSchur, MatchesReferenceCorpus) {
    for (const auto& [key, terms] : expected_values().schur) {
        const auto got = rnu_schur_expansion(key.first, key.second, cache());
        ASSERT_EQ(got.to_map(), terms) << "n=" << key.first;
    }
}

TEST(RnuSchur, BasisRoundTrip) {
    for (int n = 1; n <= 20; ++n)
        for (unsigned u = 0; u <= 4; ++u)
            ASSERT_EQ(ell_to_schur(rnu_ell_expansion(n, u), cache()), rnu_schur_expansion(n, u, cache()))
                << n << " u=" << u;
}

TEST(RnuSchur, SelfConjugateForOddN) {
    for (int n = 1; n <= 15; n += 2) {
        const auto e = rnu_schur_expansion(n, 1, cache());
        for (std::size_t i = 0; i < e.index().size(); ++i)
            ASSERT_EQ(e.dense()[i], e.coefficient(e.index()[i].conjugate())) << n << " " << e.index()[i].str();
    }
}

TEST(RnuSchur, ZeroPowerContainsAllIrreducibles) {
    for (int n = 1; n <= 14; ++n) {
        const auto e = rnu_schur_expansion(n, 0, cache());
        for (std::size_t i = 0; i < e.index().size(); ++i) {
            const bool exempt = n % 4 == 2 && e.index()[i] == Partition::rectangle(1, n);
            if (exempt)
                ASSERT_EQ(e.dense()[i], 0) << n;
            else
                ASSERT_GT(e.dense()[i], 0) << n << " " << e.index()[i].str();
        }
    }
}

TEST(RnuSchur, OneDimensionalAndHookMultiplicities) {
    for (int n = 2; n <= 20; ++n)
        for (unsigned u = 0; u <= 6; ++u) {
            const auto e = rnu_schur_expansion(n, u, cache());
            const auto rep = multiplicity_report(n, u);
            ASSERT_EQ(e.coefficient(Partition{n}), trivial_multiplicity(n, u)) << n << " u=" << u;
            ASSERT_EQ(e.coefficient(Partition::rectangle(1, n)), sign_multiplicity(n, u));
            ASSERT_EQ(e.coefficient(hook(n - 1, 1)), rep.hook_n_minus_1_1);
            ASSERT_EQ(e.coefficient(hook(2, n - 2)), rep.hook_2_1s);
        }
}

TEST(CheckPositivity, Examples) {
    const auto v8 = check_positivity(8, 3, cache());
    EXPECT_FALSE(v8.schur_positive);
    ASSERT_TRUE(v8.witness.has_value());
    EXPECT_LT(v8.witness->second, 0);
    EXPECT_EQ(rnu_schur_expansion(8, 3, cache()).coefficient(v8.witness->first), v8.witness->second);

    EXPECT_TRUE(check_positivity(16, 3, cache()).schur_positive);
    EXPECT_TRUE(check_positivity(24, 5, cache()).schur_positive);

    // Negative Foulkes coefficient, yet Schur positive: the slow path is needed.
    const auto v82 = check_positivity(8, 2, cache());
    EXPECT_FALSE(v82.ell_nonneg);
    EXPECT_FALSE(v82.fast_path);
    EXPECT_TRUE(v82.schur_positive);
}

TEST(CheckPositivity, FastPathAndWitnessConsistency) {
    for (int n = 1; n <= 24; ++n)
        for (unsigned u = 0; u <= 8; ++u) {
            const auto v = check_positivity(n, u, cache());
            const bool truth = rnu_schur_expansion(n, u, cache()).is_schur_positive();
            ASSERT_EQ(v.schur_positive, truth) << n << " u=" << u;
            ASSERT_EQ(v.witness.has_value(), !v.schur_positive);
            if (v.ell_nonneg) { ASSERT_TRUE(v.schur_positive); }
        }
}

TEST(QuickReject, Examples) {
    const auto r8 = quick_reject(8, 3);
    ASSERT_TRUE(r8.has_value());
    EXPECT_EQ(r8->bound, "trivial");
    EXPECT_EQ(r8->value, -6);
    const auto r9 = quick_reject(9, 4);
    ASSERT_TRUE(r9.has_value());
    EXPECT_EQ(r9->value, 17);
    EXPECT_FALSE(quick_reject(6, 2).has_value());
}

TEST(QuickReject, NeverContradictsPositivity) {
    const auto& ev = expected_values();
    for (const auto& [key, positive] : ev.table) {
        const auto [n, u] = key;
        if (quick_reject(n, u)) { ASSERT_FALSE(check_positivity(n, u, cache()).schur_positive) << n << " u=" << u; }
    }
    for (int n = 1; n <= 24; ++n)
        for (unsigned u = 0; u <= 20; ++u)
            if (quick_reject(n, u)) { ASSERT_FALSE(check_positivity(n, u, cache()).schur_positive) << n << " u=" << u; }
}

TEST(ScalarDivisibility, Examples) {
    const auto s12 = scalar_divisibility_check(12, cache());
    EXPECT_EQ(s12.n_o, 3);
    EXPECT_EQ(s12.n_e, 4);
    EXPECT_EQ(s12.scalar, 6);
    EXPECT_TRUE(s12.divides);
    EXPECT_EQ(scalar_divisibility_check(30, cache()).scalar, 30);
    const auto s9 = scalar_divisibility_check(9, cache());
    EXPECT_EQ(s9.scalar, 3);
    EXPECT_TRUE(s9.divides);

    // R_9 / 3 = l^(9) + 2 l^(3).
    SchurExpansion q = foulkes_schur_multiplicities(9, 9, cache());
    q.add_scaled(foulkes_schur_multiplicities(9, 3, cache()), 2);
    q.add_scaled(q, 2);
    EXPECT_EQ(q, rnu_schur_expansion(9, 1, cache()));
}

TEST(ScalarDivisibility, HoldsUpToThirty) {
    for (int n = 1; n <= 30; ++n) ASSERT_TRUE(scalar_divisibility_check(n, cache()).divides) << n;
}

TEST(MultiplicityReport, Examples) {
    auto r = multiplicity_report(4, 0);
    EXPECT_EQ(r.trivial, 3);
    EXPECT_EQ(r.sign, 1);
    EXPECT_EQ(r.restriction_regular_copies, 4);
    EXPECT_EQ(multiplicity_report(6, 0).sign, 0);
    EXPECT_EQ(multiplicity_report(9, 1).trivial, 3);
    EXPECT_FALSE(multiplicity_report(9, 2).restriction_regular_copies.has_value());
    EXPECT_THROW(multiplicity_report(1, 0), domain_error);
}

TEST(MultiplicityReport, TrivialCountsDivisorsAtZeroPower) {
    for (Int n = 2; n <= 500; ++n) ASSERT_EQ(multiplicity_report(n, 0).trivial, tau(n));
}

TEST(Swanson, SmallCases) {
    EXPECT_TRUE(swanson_vanishing_check(2, cache()).empty());
    EXPECT_TRUE(swanson_vanishing_check(4, cache()).empty());
    EXPECT_TRUE(swanson_vanishing_check(6, cache()).empty());
    for (int r = 1; r <= 6; ++r)
        EXPECT_EQ(foulkes_schur_multiplicities(6, r, cache()).coefficient(Partition{3, 3}) == 0, r == 2 || r == 4);
    EXPECT_THROW(swanson_vanishing_check(15, cache()), cap_exceeded);
    EXPECT_THROW(swanson_vanishing_check(1, cache()), domain_error);
}

TEST(Swanson, VanishingSetIsExactUpToTwelve) {
    for (int n = 2; n <= 12; ++n) {
        const auto v = swanson_vanishing_check(n, cache());
        ASSERT_TRUE(v.empty()) << n << ": " << v.front().lambda.str() << " r=" << v.front().r;
    }
}

TEST(Positivity, SquareFreeAndFourTimesOddSquareFree) {
    for (int n = 1; n <= 30; ++n) {
        const bool covered = square_free(n) || (n % 4 == 0 && (n / 4) % 2 == 1 && square_free(n / 4));
        if (!covered) continue;
        for (unsigned u = 0; u <= 20; ++u) ASSERT_TRUE(check_positivity(n, u, cache()).schur_positive) << n << " u=" << u;
    }
}
