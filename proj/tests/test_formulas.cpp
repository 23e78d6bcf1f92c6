#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace cycprod;

namespace {

Rational q(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

struct ExpectedTerm {
    long long pole;
    Rational coefficient;
};

void expect_row(const PartialFractionRow& row, const Rational& constant, std::vector<ExpectedTerm> terms) {
    EXPECT_EQ(row.constant, constant);
    ASSERT_EQ(row.terms.size(), terms.size()) << render_row(row);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        EXPECT_EQ(row.terms[i].pole, terms[i].pole) << render_row(row);
        EXPECT_EQ(row.terms[i].coefficient, terms[i].coefficient) << render_row(row);
    }
}

}  // namespace

TEST(CoalescenceClosed, Examples) {
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(coalescence_closed(n, 1), q(1));
    EXPECT_EQ(coalescence_closed(3, 3), q(1, 2));
    EXPECT_EQ(coalescence_closed(4, 2), q(7, 18));
    EXPECT_EQ(coalescence_closed(4, 4), q(0));
    EXPECT_THROW(coalescence_closed(3, 4), std::invalid_argument);
    EXPECT_THROW(coalescence_closed(3, 0), std::invalid_argument);
}

TEST(CoalescenceSum, Examples) {
    EXPECT_EQ(coalescence_sum(5, 1), q(1));
    EXPECT_EQ(coalescence_sum(3, 2), q(1, 2));
    EXPECT_EQ(coalescence_sum(4, 2), q(7, 18));
    EXPECT_THROW(coalescence_sum(2, 3), std::invalid_argument);
}

TEST(BonaPittel, Examples) {
    EXPECT_EQ(bona_pittel(3, 2), q(1, 2));
    EXPECT_EQ(bona_pittel(4, 2), q(7, 18));
    for (int n = 1; n <= 15; ++n) EXPECT_EQ(bona_pittel(n, 1), q(1));
    EXPECT_THROW(bona_pittel(2, 3), std::invalid_argument);
}

TEST(Coalescence, ThreeRoutesAgreeUpToThirty) {
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k <= n; ++k) {
            const Rational closed = coalescence_closed(n, k);
            ASSERT_EQ(coalescence_sum(n, k), closed) << "n=" << n << " k=" << k;
            ASSERT_EQ(bona_pittel(n, k), closed) << "n=" << n << " k=" << k;
            ASSERT_GE(closed, q(0));
            ASSERT_LE(closed, q(1));
        }
}

TEST(Coalescence, SmallKSpecialCases) {
    for (long long n = 3; n <= 50; ++n) {
        if (n % 2) {
            EXPECT_EQ(coalescence_closed(n, 2), q(1, 2));
            EXPECT_EQ(coalescence_closed(n, 3), q(1, 3) + q(1, (n - 2) * (n + 3)));
        } else {
            EXPECT_EQ(coalescence_closed(n, 2), q(1, 2) - q(2, (n - 1) * (n + 2)));
            EXPECT_EQ(coalescence_closed(n, 3), q(1, 3) - q(3, (n - 1) * (n + 2)));
        }
    }
}

TEST(Coalescence, FullSetOddN) {
    for (long long n = 1; n <= 49; ++n) EXPECT_EQ(coalescence_closed(n, n), n % 2 ? q(2, n + 1) : q(0)) << n;
}

TEST(Coalescence, MatchesAllPairsDefinitionForSmallN) {
    // Both cycles uniform and independent, subset fixed to {1..k}.
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            EXPECT_EQ(coalescence_closed(n, k), testkit::coalescence_over_all_pairs(n, k)) << n << "," << k;
}

TEST(Separation, Examples) {
    EXPECT_EQ(separation_probability(3, 2), q(1, 2));
    EXPECT_EQ(separation_probability(4, 2), q(11, 18));
    for (int n = 2; n <= 30; ++n) EXPECT_EQ(separation_probability(n, 2) + coalescence_closed(n, 2), q(1)) << n;
    EXPECT_THROW(separation_probability(3, 1), std::invalid_argument);
    EXPECT_THROW(separation_probability(3, 4), std::invalid_argument);
}

TEST(Separation, MatchesAllPairsDefinitionForSmallN) {
    for (int n = 2; n <= 6; ++n)
        for (int k = 2; k <= n; ++k)
            EXPECT_EQ(separation_probability(n, k), testkit::separation_over_all_pairs(n, k)) << n << "," << k;
}

TEST(KwakLee, Examples) {
    const auto two = kwak_lee_cycle_distribution(2);
    EXPECT_EQ(two.at(1), q(0));
    EXPECT_EQ(two.at(2), q(1));
    const auto three = kwak_lee_cycle_distribution(3);
    EXPECT_EQ(three.at(1), q(1, 2));
    EXPECT_EQ(three.at(2), q(0));
    EXPECT_EQ(three.at(3), q(1, 2));
    EXPECT_THROW(kwak_lee_cycle_distribution(0), std::invalid_argument);
}

TEST(KwakLee, SumsToOneAndVanishesOffParity) {
    for (int n = 1; n <= 40; ++n) {
        Rational total;
        for (const auto& [nu, p] : kwak_lee_cycle_distribution(n)) {
            total += p;
            if ((nu - n) % 2 != 0) EXPECT_EQ(p, q(0));
        }
        EXPECT_EQ(total, q(1)) << n;
    }
}

TEST(Counts, Examples) {
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(count_seq_colored(std::vector<int>{n}), factorial(n - 1));
        EXPECT_EQ(count_colored(n, 1), factorial(n - 1));
    }
    EXPECT_EQ(count_seq_colored(std::vector<int>{1, 1, 1}), 6);
    EXPECT_EQ(count_seq_colored(std::vector<int>{5, 2, 4, 1, 2, 2}), factorial(16) / 11);
    EXPECT_EQ(count_colored(3, 3), 6);
    EXPECT_EQ(count_colored(4, 2), 24);
    EXPECT_EQ(count_colored_subsets(3, 3, 2, 2), 18);
    EXPECT_EQ(count_colored_subsets(5, 2, 2, 3), 0);
    for (int n = 1; n <= 8; ++n)
        for (int r = 1; r <= n; ++r) EXPECT_EQ(count_colored_subsets(n, r, 1, 1), n * count_colored(n, r));
    EXPECT_THROW(count_seq_colored(std::vector<int>{}), std::invalid_argument);
    EXPECT_THROW(count_seq_colored(std::vector<int>{2, 0}), std::invalid_argument);
    EXPECT_THROW(count_colored(2, 3), std::invalid_argument);
    EXPECT_THROW(count_colored_subsets(3, 4, 1, 1), std::invalid_argument);
}

TEST(Counts, SvectorCountsSumToColoredCount) {
    for (int n = 1; n <= 12; ++n)
        for (int r = 1; r <= n; ++r) {
            BigInt total = 0;
            detail::for_each_composition(n, r, [&](std::span<const int> s) { total += count_seq_colored(s); });
            EXPECT_EQ(total, count_colored(n, r));
        }
}

TEST(PartialFractionTable, MatchesPublishedTable) {
    auto t1 = partial_fraction_table(1);
    expect_row(t1.even, q(1), {});
    expect_row(t1.odd, q(1), {});

    auto t2 = partial_fraction_table(2);
    expect_row(t2.even, q(1, 2), {{1, q(-2, 3)}, {-2, q(2, 3)}});
    expect_row(t2.odd, q(1, 2), {});

    auto t3 = partial_fraction_table(3);
    expect_row(t3.even, q(1, 3), {{1, q(-1)}, {-2, q(1)}});
    expect_row(t3.odd, q(1, 3), {{2, q(1, 5)}, {-3, q(-1, 5)}});

    auto t4 = partial_fraction_table(4);
    expect_row(t4.even, q(1, 4), {{3, q(-2, 35)}, {1, q(-6, 5)}, {-2, q(6, 5)}, {-4, q(2, 35)}});
    expect_row(t4.odd, q(1, 4), {{2, q(2, 5)}, {-3, q(-2, 5)}});

    auto t5 = partial_fraction_table(5);
    expect_row(t5.even, q(1, 5), {{3, q(-1, 7)}, {1, q(-4, 3)}, {-2, q(4, 3)}, {-4, q(1, 7)}});
    expect_row(t5.odd, q(1, 5), {{4, q(1, 63)}, {2, q(4, 7)}, {-3, q(-4, 7)}, {-5, q(-1, 63)}});

    EXPECT_THROW(partial_fraction_table(0), std::invalid_argument);
}

TEST(PartialFractionTable, Rendering) {
    EXPECT_EQ(render_row(partial_fraction_table(2).even), "1/2 - (2/3)/(n-1) + (2/3)/(n+2)");
    EXPECT_EQ(render_row(partial_fraction_table(3).odd), "1/3 + (1/5)/(n-2) - (1/5)/(n+3)");
    EXPECT_EQ(render_row(partial_fraction_table(3).even), "1/3 - 1/(n-1) + 1/(n+2)");
    EXPECT_EQ(render_row(partial_fraction_table(1).odd), "1");
}

TEST(PartialFractionTable, RowsEvaluateToClosedForm) {
    for (int k = 1; k <= 10; ++k) {
        const auto table = partial_fraction_table(k);
        for (int n = k; n < k + 20; ++n) {
            const PartialFractionRow& row = n % 2 ? table.odd : table.even;
            ASSERT_EQ(row.evaluate(n), coalescence_closed(n, k)) << "k=" << k << " n=" << n;
            for (const auto& term : row.terms) {
                ASSERT_GE(term.pole, -k);
                ASSERT_LE(term.pole, k - 1);
            }
        }
    }
    EXPECT_THROW(partial_fraction_table(3).even.evaluate(1), std::domain_error);
}
