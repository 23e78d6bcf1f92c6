#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cycprod;
using cycprod::testkit::Gen;

namespace {

Permutation cycle_of(int n, std::vector<int> c) { return Permutation::from_cycle(n, c); }

}  // namespace

TEST(ValidateColoredCycle, Examples) {
    EXPECT_TRUE(validate_colored_cycle(cycle_of(5, {1, 3, 5, 2, 4}), std::vector<int>(5, 1)));
    EXPECT_TRUE(validate_colored_cycle(cycle_of(3, {1, 2, 3}), std::vector<int>{1, 2, 3}));
    EXPECT_FALSE(validate_colored_cycle(cycle_of(3, {1, 3, 2}), std::vector<int>{1, 2, 3}));
}

TEST(ValidateColoredCycle, StructuralViolationsReturnFalse) {
    const Permutation three = cycle_of(3, {1, 2, 3});
    EXPECT_FALSE(validate_colored_cycle(Permutation::identity(3), std::vector<int>{1, 1, 1}));  // not an n-cycle
    EXPECT_FALSE(validate_colored_cycle(three, std::vector<int>{1, 1}));                       // wrong length
    EXPECT_FALSE(validate_colored_cycle(three, std::vector<int>{1, 3, 3}));                    // color 2 unused
    EXPECT_FALSE(validate_colored_cycle(three, std::vector<int>{0, 1, 1}));                    // color out of range
    EXPECT_FALSE(validate_colored_cycle(Permutation(), std::vector<int>{}));
}

TEST(SvectorOf, Examples) {
    EXPECT_EQ(svector_of({cycle_of(4, {1, 2, 3, 4}), {1, 1, 1, 1}}), (std::vector<int>{4}));
    EXPECT_EQ(svector_of({cycle_of(3, {1, 2, 3}), {1, 2, 3}}), (std::vector<int>{1, 1, 1}));
}

TEST(SvectorOf, SixteenCycleExample) {
    const std::vector<int> cyc{1, 14, 12, 13, 6, 7, 10, 11, 15, 9, 8, 16, 4, 5, 2, 3};
    const std::vector<int> color_along{2, 3, 5, 4, 3, 1, 1, 6, 5, 1, 1, 1, 2, 6, 3, 3};
    ColoredCycle c{cycle_of(16, cyc), std::vector<int>(16)};
    for (std::size_t i = 0; i < cyc.size(); ++i) c.colors[cyc[i] - 1] = color_along[i];
    ASSERT_TRUE(validate_colored_cycle(c));
    EXPECT_EQ(svector_of(c), (std::vector<int>{5, 2, 4, 1, 2, 2}));
    EXPECT_EQ(c.num_colors(), 6);
}

TEST(EnumerateColoredCycles, SpecExamples) {
    EXPECT_EQ(BigInt(enumerate_colored_cycles(5, 1).size()), factorial(4));
    const auto three = enumerate_colored_cycles(3, 3);
    EXPECT_EQ(three.size(), 6u);
    for (const auto& c : three) EXPECT_EQ(c.sigma, cycle_of(3, {1, 2, 3}));
    EXPECT_EQ(enumerate_colored_cycles(4, 2).size(), 24u);
}

TEST(EnumerateColoredCycles, MatchesLiteralFilter) {
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) {
            auto listed = enumerate_colored_cycles(n, r);
            std::sort(listed.begin(), listed.end());
            EXPECT_EQ(listed, testkit::colored_cycles_by_filter(n, r)) << "n=" << n << " r=" << r;
        }
}

TEST(EnumerateColoredCycles, CountsMatchFormulaAndValidate) {
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= n; ++r) {
            long long count = 0;
            std::set<std::vector<int>> compositions;
            for_each_colored_cycle(n, r, [&](const ColoredCycle& c) {
                ++count;
                EXPECT_TRUE(validate_colored_cycle(c));
                compositions.insert(svector_of(c));
            });
            EXPECT_EQ(BigInt(count), count_colored(n, r)) << "n=" << n << " r=" << r;
            // Every composition of n into r parts is realized.
            EXPECT_EQ(BigInt(compositions.size()), binomial(n - 1, r - 1));
        }
}

TEST(EnumerateColoredCycles, Guards) {
    EXPECT_THROW(enumerate_colored_cycles(kMaxColoredCycleLength + 1, 1), std::out_of_range);
    EXPECT_THROW(enumerate_colored_cycles(3, 4), std::out_of_range);
    EXPECT_THROW(enumerate_colored_cycles(3, 0), std::out_of_range);
}

TEST(ColoredSubsets, SpecExamples) {
    long long count = 0;
    for_each_colored_subset_instance(3, 3, 2, 2, [&](const ColoredSubsetInstance& inst) {
        ++count;
        EXPECT_EQ(inst.distinct_colors(), 2);
        EXPECT_EQ(inst.subset.size(), 2u);
    });
    EXPECT_EQ(count, 18);

    count = 0;
    for_each_colored_subset_instance(4, 3, 2, 3, [&](const ColoredSubsetInstance&) { ++count; });
    EXPECT_EQ(count, 0);  // t > k
    EXPECT_EQ(count_colored_subsets(4, 3, 2, 3), 0);

    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r) {
            count = 0;
            for_each_colored_subset_instance(n, r, 1, 1, [&](const ColoredSubsetInstance&) { ++count; });
            EXPECT_EQ(BigInt(count), n * count_colored(n, r));
        }
}

TEST(ColoredSubsets, CountsMatchFormula) {
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= n; ++r)
            for (int k = 1; k <= n; ++k)
                for (int t = 1; t <= std::min(k, r); ++t) {
                    long long count = 0;
                    for_each_colored_subset_instance(n, r, k, t, [&](const ColoredSubsetInstance&) { ++count; });
                    EXPECT_EQ(BigInt(count), count_colored_subsets(n, r, k, t))
                        << "n=" << n << " r=" << r << " k=" << k << " t=" << t;
                }
}

TEST(ColoredSubsets, Guards) {
    auto noop = [](const ColoredSubsetInstance&) {};
    EXPECT_THROW(for_each_colored_subset_instance(kMaxColoredSubsetLength + 1, 1, 1, 1, noop), std::out_of_range);
    EXPECT_THROW(for_each_colored_subset_instance(3, 1, 4, 1, noop), std::out_of_range);
    EXPECT_THROW(for_each_colored_subset_instance(3, 1, 1, 0, noop), std::out_of_range);
}

TEST(ColoredStrip, BlocksAndValidation) {
    const std::vector<int> blocks{2, 1, 3};
    const ColoredStrip s = ColoredStrip::from_blocks(blocks);
    EXPECT_EQ(s.colors, (std::vector<int>{1, 1, 2, 3, 3, 3}));
    EXPECT_EQ(s.block_sizes(), blocks);
    EXPECT_EQ(s.num_colors(), 3);
    EXPECT_TRUE(validate_strip(s));

    ColoredStrip marked = s;
    marked.marked = std::vector<int>{1, 2, 6};
    EXPECT_TRUE(validate_strip(marked));
    EXPECT_EQ(marked.marked_color_count(), 2);

    EXPECT_FALSE(validate_strip({{1, 3}, std::nullopt}));   // skips a color
    EXPECT_FALSE(validate_strip({{2, 2}, std::nullopt}));   // does not start at 1
    EXPECT_FALSE(validate_strip({{1, 2, 1}, std::nullopt}));  // decreasing
    EXPECT_FALSE(validate_strip({{}, std::nullopt}));
    EXPECT_FALSE(validate_strip({{1, 1}, std::vector<int>{2, 1}}));  // marks unsorted
    EXPECT_FALSE(validate_strip({{1, 1}, std::vector<int>{3}}));     // mark out of range
}

TEST(ColoredStrip, MarkedStripCounts) {
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= n; ++r)
            for (int k = 1; k <= n; ++k)
                for (int t = 1; t <= std::min(k, r); ++t) {
                    long long count = 0;
                    for_each_marked_strip(n, r, k, t, [&](const ColoredStrip& s) {
                        ++count;
                        EXPECT_TRUE(validate_strip(s));
                        EXPECT_EQ(s.marked_color_count(), t);
                    });
                    // compositions of n into r parts times k-subsets with t colors
                    long long expected = 0;
                    detail::for_each_composition(n, r, [&](std::span<const int> blocks) {
                        const ColoredStrip base = ColoredStrip::from_blocks(blocks);
                        detail::for_each_subset(n, k, [&](std::span<const int> m) {
                            std::set<int> colors;
                            for (int p : m) colors.insert(base.colors[p - 1]);
                            expected += static_cast<int>(colors.size()) == t;
                        });
                    });
                    EXPECT_EQ(count, expected);
                }
}

TEST(ColoredStructureProperty, RandomColoredCyclesValidate) {
    Gen g(21);
    for (int iter = 0; iter < 2000; ++iter) {
        const int n = static_cast<int>(testkit::uniform_int(g, 1, 12));
        const ColoredCycle c = testkit::random_colored_cycle(g, n);
        ASSERT_TRUE(validate_colored_cycle(c));
        // color(sigma(x)) = color(x+1) cyclically is equivalent to monochromatic cycles of sigma o tau.
        for (int x = 1; x <= n; ++x) ASSERT_EQ(c.color_of(c.sigma(x)), c.color_of(x % n + 1));
        const auto s = svector_of(c);
        ASSERT_EQ(std::accumulate(s.begin(), s.end(), 0), n);
        for (int v : s) ASSERT_GT(v, 0);
    }
}
