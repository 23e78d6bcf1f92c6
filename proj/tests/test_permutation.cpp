#include "test_support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace cycprod;
using cycprod::testkit::Gen;

TEST(Permutation, ConstructionAndValidation) {
    const Permutation p = Permutation::from_images({3, 1, 2});
    EXPECT_EQ(p(1), 3);
    EXPECT_EQ(p.cycle_string(), "(1 3 2)");
    EXPECT_EQ(Permutation::identity(4).cycle_string(), "(1)(2)(3)(4)");
    EXPECT_EQ(Permutation::identity(0).cycle_string(), "()");
    EXPECT_THROW(Permutation::from_images({1, 1, 2}), std::invalid_argument);
    EXPECT_THROW(Permutation::from_images({0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation::from_images({1, 3}), std::invalid_argument);
    const std::vector<int> repeated{1, 2, 1};
    EXPECT_THROW(Permutation::from_cycle(3, repeated), std::invalid_argument);
}

TEST(Permutation, FromCycleFixesUnlistedPoints) {
    const std::vector<int> cyc{2, 4};
    const Permutation p = Permutation::from_cycle(5, cyc);
    EXPECT_EQ(p.cycle_string(), "(1)(2 4)(3)(5)");
    EXPECT_EQ(p.cycle_count(), 4);
}

TEST(Permutation, ComposeActsRightFirst) {
    const Permutation p = Permutation::from_images({2, 3, 1});
    const Permutation q = Permutation::from_images({2, 1, 3});
    const Permutation pq = compose(p, q);
    EXPECT_EQ(pq(1), p(q(1)));
    EXPECT_EQ(pq.images(), (std::vector<int>{3, 2, 1}));
    EXPECT_THROW(compose(p, Permutation::identity(2)), std::invalid_argument);
}

TEST(Permutation, CanonicalTau) {
    EXPECT_EQ(canonical_tau(4).images(), (std::vector<int>{4, 1, 2, 3}));
    EXPECT_EQ(canonical_tau(4).cycle_string(), "(1 4 3 2)");
    EXPECT_EQ(canonical_tau(1).images(), (std::vector<int>{1}));
    EXPECT_THROW(canonical_tau(0), std::invalid_argument);
}

TEST(Permutation, CyclesMeetingSubset) {
    const Permutation p = Permutation::from_images({2, 1, 4, 3, 5});
    const std::vector<int> a{1, 2}, b{1, 3, 5}, bad{6};
    EXPECT_EQ(cycles_meeting_subset(p, a), 1);
    EXPECT_EQ(cycles_meeting_subset(p, b), 3);
    EXPECT_THROW(cycles_meeting_subset(p, bad), std::invalid_argument);
}

TEST(PermutationProperty, InverseAndCycles) {
    Gen g(11);
    for (int iter = 0; iter < 1000; ++iter) {
        const int n = static_cast<int>(testkit::uniform_int(g, 1, 15));
        const Permutation p = testkit::random_permutation(g, n);
        const Permutation q = testkit::random_permutation(g, n);
        ASSERT_EQ(compose(p, p.inverse()), Permutation::identity(n));
        ASSERT_EQ(compose(p.inverse(), p), Permutation::identity(n));
        ASSERT_EQ(compose(p, q).inverse(), compose(q.inverse(), p.inverse()));
        // cycles() partitions {1..n}, each orbit starts at its minimum, and orbits follow p.
        const auto cycles = p.cycles();
        ASSERT_EQ(static_cast<int>(cycles.size()), p.cycle_count());
        std::vector<int> seen;
        int prev_min = 0;
        for (const auto& c : cycles) {
            ASSERT_EQ(c.front(), *std::min_element(c.begin(), c.end()));
            ASSERT_GT(c.front(), prev_min);
            prev_min = c.front();
            for (std::size_t i = 0; i < c.size(); ++i) ASSERT_EQ(p(c[i]), c[(i + 1) % c.size()]);
            seen.insert(seen.end(), c.begin(), c.end());
        }
        std::sort(seen.begin(), seen.end());
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        ASSERT_EQ(seen, all);
    }
}

TEST(PermutationProperty, ConjugationPreservesCycleType) {
    Gen g(12);
    for (int iter = 0; iter < 500; ++iter) {
        const int n = static_cast<int>(testkit::uniform_int(g, 1, 12));
        const Permutation p = testkit::random_permutation(g, n);
        const Permutation r = testkit::random_permutation(g, n);
        auto type = [](const Permutation& x) {
            std::vector<std::size_t> t;
            for (const auto& c : x.cycles()) t.push_back(c.size());
            std::sort(t.begin(), t.end());
            return t;
        };
        ASSERT_EQ(type(compose(compose(r, p), r.inverse())), type(p));
    }
}

TEST(NCycleEnumeration, MatchesFilterOfAllPermutations) {
    for (int n = 1; n <= 7; ++n) {
        const auto listed = enumerate_ncycles(n);
        EXPECT_EQ(BigInt(listed.size()), factorial(n - 1));
        std::set<Permutation> a(listed.begin(), listed.end());
        const auto filtered = testkit::ncycles_by_filter(n);
        std::set<Permutation> b(filtered.begin(), filtered.end());
        EXPECT_EQ(a.size(), listed.size()) << "duplicates at n=" << n;
        EXPECT_EQ(a, b);
    }
}

TEST(NCycleEnumeration, LexicographicInTail) {
    const auto listed = enumerate_ncycles(4);
    std::vector<std::string> names;
    for (const auto& p : listed) names.push_back(p.cycle_string());
    EXPECT_EQ(names, (std::vector<std::string>{"(1 2 3 4)", "(1 2 4 3)", "(1 3 2 4)", "(1 3 4 2)", "(1 4 2 3)",
                                               "(1 4 3 2)"}));
}

TEST(NCycleEnumeration, SlicesPartitionTheStreamInOrder) {
    const int n = 6;
    const auto full = enumerate_ncycles(n);
    std::vector<Permutation> joined;
    for (int first = 2; first <= n; ++first)
        for_each_ncycle_with_successor(n, first, [&](const Permutation& p) {
            EXPECT_EQ(p(1), first);
            joined.push_back(p);
        });
    EXPECT_EQ(joined, full);
}

TEST(NCycleEnumeration, Guards) {
    EXPECT_THROW(for_each_ncycle(0, [](const Permutation&) {}), std::out_of_range);
    EXPECT_THROW(for_each_ncycle(kMaxEnumeratedCycleLength + 1, [](const Permutation&) {}), std::out_of_range);
    EXPECT_THROW(for_each_ncycle_with_successor(5, 1, [](const Permutation&) {}), std::out_of_range);
    EXPECT_THROW(for_each_ncycle_with_successor(5, 6, [](const Permutation&) {}), std::out_of_range);
}

TEST(Sampling, UniformBelowStaysInRange) {
    Rng rng(5);
    for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL, (1ULL << 63) + 5}) {
        for (int i = 0; i < 1000; ++i) ASSERT_LT(uniform_below(rng, bound), bound);
    }
    EXPECT_THROW(uniform_below(rng, 0), std::invalid_argument);
}

TEST(Sampling, SampleIsAnNCycleAndReproducible) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Permutation a = sample_ncycle(20, seed);
        ASSERT_EQ(a.cycle_count(), 1);
        ASSERT_EQ(a, sample_ncycle(20, seed));
    }
    EXPECT_EQ(sample_ncycle(1, 3).images(), (std::vector<int>{1}));
}

TEST(Sampling, SamplerIsUniformOverFourCycles) {
    // 6 four-cycles, 60000 draws: each count should be near 10000.
    Rng rng(99);
    std::map<Permutation, int> hits;
    for (int i = 0; i < 60000; ++i) ++hits[sample_ncycle(4, rng)];
    ASSERT_EQ(hits.size(), 6u);
    double chi2 = 0;
    for (const auto& [p, h] : hits) chi2 += (h - 10000.0) * (h - 10000.0) / 10000.0;
    EXPECT_LT(chi2, 20.5);  // chi-square, 5 degrees of freedom, p ~ 0.001
}
