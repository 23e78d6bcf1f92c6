#pragma once

// Exhaustive verification suites shared by the CLI and the acceptance runner.
// Each check is recorded as an IdentityReport; for structural checks the two
// sides are 0/1 flags or exact counts.

#include "bijection.hpp"
#include "colored.hpp"
#include "formulas.hpp"
#include "identities.hpp"
#include "oracle.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace cycprod {

namespace detail {

inline std::string svector_name(const std::vector<int>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + ")";
}

inline Rational flag(bool ok) { return Rational(ok ? 1 : 0); }

}  // namespace detail

/// Colored-cycle bijection for every n <= n_max and every r: roundtrip,
/// image validity, and |image| = n!/(n-r+1) per s-vector.
inline std::vector<IdentityReport> verify_colored_cycle_bijection(int n_max) {
    if (n_max < 1 || n_max > kMaxColoredCycleLength)
        throw std::out_of_range("verify_colored_cycle_bijection: n_max must lie in 1.." +
                                std::to_string(kMaxColoredCycleLength));
    const std::string grid = "1 <= r <= n <= " + std::to_string(n_max);
    IdentityReport roundtrip = detail::make_report("bijection_roundtrip", grid);
    IdentityReport images = detail::make_report("bijection_image_count", grid + ", per s-vector");
    IdentityReport totals = detail::make_report("colored_cycle_count", grid);
    for (int n = 1; n <= n_max; ++n) {
        for (int r = 1; r <= n; ++r) {
            std::map<std::vector<int>, std::set<SequenceCyclePair>> by_svector;
            long long count = 0;
            for_each_colored_cycle(n, r, [&](const ColoredCycle& c) {
                ++count;
                const std::string point = "sigma=" + c.sigma.cycle_string() + " colors=" + detail::svector_name(c.colors);
                bool ok = false;
                try {
                    const SequenceCyclePair p = full_bijection(c);
                    check_sequence_cycle_pair(p);
                    ok = p.svector == svector_of(c) && full_inverse(p) == c;
                    by_svector[p.svector].insert(p);
                } catch (const std::exception&) {
                    ok = false;
                }
                roundtrip.record(point, detail::flag(ok), detail::flag(true));
            });
            totals.record(detail::point_name({{"n", n}, {"r", r}}), Rational(BigInt(count)),
                          Rational(count_colored(n, r)));
            for (const auto& [s, set] : by_svector)
                images.record("s=" + detail::svector_name(s), Rational(BigInt(set.size())),
                              Rational(count_seq_colored(s)));
        }
    }
    return {roundtrip, images, totals};
}

/// Colored-subset extension for n <= n_max: extended and strip roundtrips,
/// the colored-subset count, and the marked-strip count
/// C(n+t-1, r+k-1) C(r,t) C(k-1,t-1) realized by distinct strip triples.
inline std::vector<IdentityReport> verify_subset_bijections(int n_max) {
    if (n_max < 1 || n_max > kMaxColoredSubsetLength)
        throw std::out_of_range("verify_subset_bijections: n_max must lie in 1.." +
                                std::to_string(kMaxColoredSubsetLength));
    const std::string grid = "1 <= t <= k, r <= n <= " + std::to_string(n_max);
    IdentityReport extended = detail::make_report("extended_roundtrip", grid);
    IdentityReport strips = detail::make_report("strip_roundtrip", grid);
    IdentityReport subset_count = detail::make_report("colored_subset_count", grid);
    IdentityReport strip_count = detail::make_report("marked_strip_count", grid);
    for (int n = 1; n <= n_max; ++n)
        for (int r = 1; r <= n; ++r)
            for (int k = 1; k <= n; ++k)
                for (int t = 1; t <= std::min(k, r); ++t) {
                    const std::string point = detail::point_name({{"n", n}, {"r", r}, {"k", k}, {"t", t}});
                    long long instances = 0;
                    for_each_colored_subset_instance(n, r, k, t, [&](const ColoredSubsetInstance& inst) {
                        ++instances;
                        bool ok = false;
                        try {
                            const ExtendedImage img = extended_forward(inst);
                            ok = img.strip.marked_color_count() == t && extended_inverse(img) == inst;
                        } catch (const std::exception&) {
                            ok = false;
                        }
                        extended.record(point, detail::flag(ok), detail::flag(true));
                    });
                    subset_count.record(point, Rational(BigInt(instances)),
                                        Rational(count_colored_subsets(n, r, k, t)));

                    std::set<std::vector<int>> seen;
                    long long marked = 0;
                    for_each_marked_strip(n, r, k, t, [&](const ColoredStrip& s) {
                        ++marked;
                        bool ok = false;
                        try {
                            const StripTriple triple = strip_forward(s);
                            ok = triple.plain.size() == n + t && triple.plain.num_colors() == r + k &&
                                 static_cast<int>(triple.color_subset.size()) == t &&
                                 triple.marks_per_color.size() == k && strip_inverse(triple) == s;
                            std::vector<int> key = triple.plain.colors;
                            key.push_back(0);
                            key.insert(key.end(), triple.color_subset.begin(), triple.color_subset.end());
                            key.push_back(0);
                            key.insert(key.end(), triple.marks_per_color.colors.begin(),
                                       triple.marks_per_color.colors.end());
                            seen.insert(std::move(key));
                        } catch (const std::exception&) {
                            ok = false;
                        }
                        strips.record(point, detail::flag(ok), detail::flag(true));
                    });
                    const BigInt expected = binomial(n + t - 1, r + k - 1) * binomial(r, t) * binomial(k - 1, t - 1);
                    strip_count.record(point, Rational(BigInt(marked)), Rational(expected));
                    strip_count.record(point + " distinct", Rational(BigInt(seen.size())), Rational(expected));
                }
    return {extended, strips, subset_count, strip_count};
}

/// Exhaustive oracle against every closed form for n <= n_max.
inline std::vector<IdentityReport> verify_oracle(int n_max, unsigned workers = 1) {
    if (n_max < 1 || n_max > kMaxOracleLength)
        throw std::out_of_range("verify_oracle: n_max must lie in 1.." + std::to_string(kMaxOracleLength));
    const std::string grid = "n <= " + std::to_string(n_max);
    IdentityReport coal = detail::make_report("oracle_coalescence", "1 <= k <= " + grid);
    IdentityReport sep = detail::make_report("oracle_separation", "2 <= k <= " + grid);
    IdentityReport dist = detail::make_report("oracle_cycle_distribution", grid);
    IdentityReport parity = detail::make_report("oracle_cycle_parity", grid);
    IdentityReport meeting = detail::make_report("oracle_b_cycle_partition", "1 <= k <= " + grid);
    for (int n = 1; n <= n_max; ++n) {
        const OracleProfile p = oracle_profile(n, workers);
        for (int k = 1; k <= n; ++k) {
            const std::string point = detail::point_name({{"n", n}, {"k", k}});
            coal.record(point, p.coalescence(k).probability, coalescence_closed(n, k));
            if (k >= 2) sep.record(point, p.separation(k).probability, separation_probability(n, k));
            BigInt fixed_sum = 0, subset_sum = 0;
            for (int b = 1; b <= k; ++b) {
                fixed_sum += p.fixed_meeting[k][b];
                subset_sum += p.subset_meeting[k][b];
            }
            meeting.record(point + " fixed", Rational(fixed_sum), Rational(factorial(n - 1)));
            meeting.record(point + " subsets", Rational(subset_sum), Rational(p.pair_count(k)));
        }
        const auto formula = kwak_lee_cycle_distribution(n);
        for (int nu = 1; nu <= n; ++nu) {
            const std::string point = detail::point_name({{"n", n}, {"nu", nu}});
            dist.record(point, Rational(p.cycle_counts[nu], p.sigma_count), formula.at(nu));
            if ((nu - n) % 2 != 0) parity.record(point, Rational(p.cycle_counts[nu]), Rational());
        }
    }
    return {coal, sep, dist, parity, meeting};
}

}  // namespace cycprod
