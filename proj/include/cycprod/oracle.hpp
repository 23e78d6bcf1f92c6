#pragma once

// Ground truth by exhaustive enumeration of sigma over all n-cycles with tau
// fixed to canonical_tau(n), and a seeded Monte-Carlo estimator over
// independent pairs of uniform n-cycles for larger n.

#include "exact.hpp"
#include "permutation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cycprod {

inline constexpr int kMaxOracleLength = 11;

struct OracleResult {
    BigInt favorable;
    BigInt total;
    Rational probability;

    static OracleResult of(BigInt favorable, BigInt total) {
        Rational p(favorable, total);
        return {std::move(favorable), std::move(total), std::move(p)};
    }
};

// Fixing tau only preserves the cycle type of sigma o tau, not where 1..k
// land, so the probabilities for two independent uniform n-cycles are
// averaged over all (sigma, k-subset) pairs. The counts for the literal
// subset {1..k} with tau fixed are kept separately in fixed_meeting.

/// One pass worth of statistics for a given n:
///   subset_meeting[k][b] = #{(sigma, K) : |K| = k, K meets exactly b cycles of sigma o tau}
///   fixed_meeting[k][b]  = #{sigma : {1..k} meets exactly b cycles of sigma o tau}
///   cycle_counts[nu]     = #{sigma : c(sigma o tau) = nu}
struct OracleProfile {
    int n = 0;
    BigInt sigma_count;
    std::map<std::vector<int>, BigInt> cycle_types;  // sorted cycle lengths -> #sigma
    std::vector<std::vector<BigInt>> subset_meeting;
    std::vector<std::vector<BigInt>> fixed_meeting;
    std::vector<BigInt> cycle_counts;

    explicit OracleProfile(int size = 0)
        : n(size),
          sigma_count(0),
          subset_meeting(square(size)),
          fixed_meeting(square(size)),
          cycle_counts(static_cast<std::size_t>(size) + 1, 0) {}

    /// #{(sigma, K)} over all sigma and all k-subsets K.
    BigInt pair_count(int k) const { return sigma_count * binomial(n, k); }

    OracleResult coalescence(int k) const { return OracleResult::of(subset_meeting[k][1], pair_count(k)); }
    OracleResult separation(int k) const { return OracleResult::of(subset_meeting[k][k], pair_count(k)); }

    OracleProfile& operator+=(const OracleProfile& other) {
        sigma_count += other.sigma_count;
        for (const auto& [type, count] : other.cycle_types) cycle_types[type] += count;
        for (int k = 0; k <= n; ++k)
            for (int b = 0; b <= n; ++b) {
                subset_meeting[k][b] += other.subset_meeting[k][b];
                fixed_meeting[k][b] += other.fixed_meeting[k][b];
            }
        for (int nu = 0; nu <= n; ++nu) cycle_counts[nu] += other.cycle_counts[nu];
        return *this;
    }

private:
    static std::vector<std::vector<BigInt>> square(int size) {
        return std::vector<std::vector<BigInt>>(static_cast<std::size_t>(size) + 1,
                                               std::vector<BigInt>(static_cast<std::size_t>(size) + 1, 0));
    }
};

namespace detail {

inline void check_oracle_guard(int n) {
    if (n < 1 || n > kMaxOracleLength)
        throw std::out_of_range("exhaustive oracle requires 1 <= n <= " + std::to_string(kMaxOracleLength));
}

/// c[k][b] = number of k-subsets of {1..n} meeting exactly b of the cycles
/// with the given lengths: the x^k y^b coefficient of prod (1 + y((1+x)^L - 1)).
inline std::vector<std::vector<BigInt>> subset_meeting_for_type(const std::vector<int>& lengths, int n) {
    std::vector<std::vector<BigInt>> poly(static_cast<std::size_t>(n) + 1,
                                          std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0));
    poly[0][0] = 1;
    int used = 0;
    for (int len : lengths) {
        auto next = poly;  // the "1" term: cycle not met
        for (int k = 0; k <= used; ++k)
            for (int b = 0; b <= used; ++b) {
                if (poly[k][b] == 0) continue;
                for (int j = 1; j <= len; ++j) next[k + j][b + 1] += poly[k][b] * binomial(len, j);
            }
        poly = std::move(next);
        used += len;
    }
    return poly;
}

// Accumulates one sigma at a time into machine-word counters; converted to
// BigInt once per slice.
struct ProfileAccumulator {
    int n;
    std::uint64_t total = 0;
    std::vector<std::uint64_t> fixed;  // (k, b) flattened
    std::map<std::vector<int>, std::uint64_t> types;
    std::vector<int> tau_img;
    std::vector<int> cycle_id;
    std::vector<int> lengths;
    std::vector<char> hit;

    explicit ProfileAccumulator(int size)
        : n(size),
          fixed(static_cast<std::size_t>((size + 1) * (size + 1)), 0),
          tau_img(canonical_tau(size).images()),
          cycle_id(static_cast<std::size_t>(size)),
          hit(static_cast<std::size_t>(size) + 1) {}

    void add(const Permutation& sigma) {
        ++total;
        std::fill(cycle_id.begin(), cycle_id.end(), -1);
        lengths.clear();
        for (int start = 1; start <= n; ++start) {
            if (cycle_id[start - 1] >= 0) continue;
            int len = 0;
            const int id = static_cast<int>(lengths.size());
            for (int x = start; cycle_id[x - 1] < 0; x = sigma(tau_img[x - 1])) {
                cycle_id[x - 1] = id;
                ++len;
            }
            lengths.push_back(len);
        }
        std::fill(hit.begin(), hit.end(), 0);
        int b = 0;
        for (int k = 1; k <= n; ++k) {
            const int id = cycle_id[k - 1];
            if (!hit[id]) {
                hit[id] = 1;
                ++b;
            }
            ++fixed[k * (n + 1) + b];
        }
        std::sort(lengths.begin(), lengths.end());
        ++types[lengths];
    }

    OracleProfile finish() const {
        OracleProfile p(n);
        p.sigma_count = total;
        for (int k = 0; k <= n; ++k)
            for (int b = 0; b <= n; ++b) p.fixed_meeting[k][b] = fixed[k * (n + 1) + b];
        for (const auto& [type, count] : types) {
            const BigInt c = count;
            p.cycle_types[type] = c;
            p.cycle_counts[type.size()] += c;
            const auto per = subset_meeting_for_type(type, n);
            for (int k = 0; k <= n; ++k)
                for (int b = 0; b <= n; ++b) p.subset_meeting[k][b] += c * per[k][b];
        }
        return p;
    }
};

}  // namespace detail

/// Single pass over all (n-1)! n-cycles collecting every statistic at once.
/// With workers > 1 the slices sigma(1) = 2..n run on a thread pool; the
/// combined profile is independent of the worker count.
inline OracleProfile oracle_profile(int n, unsigned workers = 1) {
    detail::check_oracle_guard(n);
    if (n == 1 || workers <= 1) {
        detail::ProfileAccumulator acc(n);
        for_each_ncycle(n, [&](const Permutation& s) { acc.add(s); });
        return acc.finish();
    }
    std::vector<OracleProfile> slices(static_cast<std::size_t>(n - 1));
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(workers, static_cast<unsigned>(n - 1));
    for (unsigned w = 0; w < count; ++w) {
        pool.emplace_back([&, w] {
            for (int first = 2 + static_cast<int>(w); first <= n; first += static_cast<int>(count)) {
                detail::ProfileAccumulator acc(n);
                for_each_ncycle_with_successor(n, first, [&](const Permutation& s) { acc.add(s); });
                slices[first - 2] = acc.finish();
            }
        });
    }
    for (auto& t : pool) t.join();
    OracleProfile combined(n);
    for (const auto& s : slices) combined += s;
    return combined;
}

inline OracleResult brute_force_coalescence(int n, int k) {
    detail::check_oracle_guard(n);
    if (k < 1 || k > n) throw std::invalid_argument("brute_force_coalescence: requires 1 <= k <= n");
    return oracle_profile(n).coalescence(k);
}

inline OracleResult brute_force_separation(int n, int k) {
    detail::check_oracle_guard(n);
    if (k < 2 || k > n) throw std::invalid_argument("brute_force_separation: requires 2 <= k <= n");
    return oracle_profile(n).separation(k);
}

/// Exact distribution of c(sigma o tau); only the values that occur are present.
inline std::map<int, Rational> brute_force_cycle_dist(int n) {
    const OracleProfile p = oracle_profile(n);
    std::map<int, Rational> dist;
    for (int nu = 1; nu <= n; ++nu)
        if (p.cycle_counts[nu] != 0) dist[nu] = Rational(p.cycle_counts[nu], p.sigma_count);
    return dist;
}

// --- Monte Carlo ----------------------------------------------------------

struct MonteCarloResult {
    double estimate = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t hits = 0;
};

inline constexpr unsigned kDefaultMonteCarloShards = 8;

namespace detail {

// Whether 1..k lie in one cycle of sigma o tau: mark the orbit of 1.
inline bool first_k_coalesce(const Permutation& sigma, const Permutation& tau, int k, std::vector<char>& mark) {
    std::fill(mark.begin(), mark.end(), 0);
    int x = 1;
    do {
        mark[x - 1] = 1;
        x = sigma(tau(x));
    } while (x != 1);
    for (int i = 2; i <= k; ++i)
        if (!mark[i - 1]) return false;
    return true;
}

inline std::uint64_t monte_carlo_shard(int n, int k, std::uint64_t samples, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<char> mark(static_cast<std::size_t>(n));
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const Permutation sigma = sample_ncycle(n, rng);
        const Permutation tau = sample_ncycle(n, rng);
        hits += first_k_coalesce(sigma, tau, k, mark);
    }
    return hits;
}

}  // namespace detail

/// Samples are split across `shards` streams seeded by SplitMix64 from `seed`.
/// The result depends only on (n, k, samples, seed, shards); `workers` only
/// changes how many threads process the shards.
inline MonteCarloResult monte_carlo_coalescence(int n, int k, std::uint64_t samples, std::uint64_t seed,
                                                unsigned shards = kDefaultMonteCarloShards, unsigned workers = 1) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("monte_carlo_coalescence: requires 1 <= k <= n");
    if (samples < 1) throw std::invalid_argument("monte_carlo_coalescence: samples must be positive");
    if (shards < 1) throw std::invalid_argument("monte_carlo_coalescence: shards must be positive");

    std::vector<std::uint64_t> shard_seed(shards), shard_samples(shards), shard_hits(shards, 0);
    std::uint64_t state = seed;
    for (unsigned s = 0; s < shards; ++s) {
        shard_seed[s] = splitmix64(state);
        shard_samples[s] = samples / shards + (s < samples % shards ? 1 : 0);
    }
    auto run = [&](unsigned w, unsigned stride) {
        for (unsigned s = w; s < shards; s += stride)
            if (shard_samples[s]) shard_hits[s] = detail::monte_carlo_shard(n, k, shard_samples[s], shard_seed[s]);
    };
    if (workers <= 1) {
        run(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
        for (auto& t : pool) t.join();
    }

    MonteCarloResult r;
    r.samples = samples;
    r.seed = seed;
    for (auto h : shard_hits) r.hits += h;
    r.estimate = static_cast<double>(r.hits) / static_cast<double>(samples);
    r.std_error = std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(samples));
    return r;
}

}  // namespace cycprod
