#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycprod {

using CycleDecomposition = std::vector<std::vector<int>>;

/// Bijection of {1..n}. All element arguments and results are 1-based.
class Permutation {
public:
    Permutation() = default;

    static Permutation identity(int n) {
        if (n < 0) throw std::invalid_argument("Permutation::identity: negative size");
        std::vector<int> img(static_cast<std::size_t>(n));
        std::iota(img.begin(), img.end(), 1);
        return Permutation(std::move(img), trusted{});
    }

    /// One-line notation: images[i-1] is the image of i.
    static Permutation from_images(std::vector<int> images) {
        const int n = static_cast<int>(images.size());
        std::vector<char> seen(images.size(), 0);
        for (int v : images) {
            if (v < 1 || v > n || seen[v - 1])
                throw std::invalid_argument("Permutation::from_images: not a bijection of {1..n}");
            seen[v - 1] = 1;
        }
        return Permutation(std::move(images), trusted{});
    }

    /// The single cycle (c0 c1 ... c_{m-1}) on {1..n}; elements not listed are fixed.
    static Permutation from_cycle(int n, std::span<const int> cycle) {
        Permutation p = identity(n);
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : cycle) {
            if (v < 1 || v > n || seen[v - 1])
                throw std::invalid_argument("Permutation::from_cycle: repeated or out-of-range element");
            seen[v - 1] = 1;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            p.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
        return p;
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
        return Permutation(std::move(inv), trusted{});
    }

    /// Orbits, each starting at its minimum, ordered by minimum.
    CycleDecomposition cycles() const {
        CycleDecomposition out;
        std::vector<char> seen(images_.size(), 0);
        for (int start = 1; start <= size(); ++start) {
            if (seen[start - 1]) continue;
            auto& cyc = out.emplace_back();
            for (int x = start; !seen[x - 1]; x = images_[x - 1]) {
                seen[x - 1] = 1;
                cyc.push_back(x);
            }
        }
        return out;
    }

    int cycle_count() const {
        int count = 0;
        std::vector<char> seen(images_.size(), 0);
        for (int start = 1; start <= size(); ++start) {
            if (seen[start - 1]) continue;
            ++count;
            for (int x = start; !seen[x - 1]; x = images_[x - 1]) seen[x - 1] = 1;
        }
        return count;
    }

    /// Cycle notation with fixed points shown, e.g. "(1 3 2)(4)".
    std::string cycle_string() const {
        if (images_.empty()) return "()";
        std::ostringstream os;
        for (const auto& cyc : cycles()) {
            os << '(';
            for (std::size_t i = 0; i < cyc.size(); ++i) os << (i ? " " : "") << cyc[i];
            os << ')';
        }
        return os.str();
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct trusted {};
    Permutation(std::vector<int> images, trusted) : images_(std::move(images)) {}

    std::vector<int> images_;
};

/// (p o q)(i) = p(q(i)); q acts first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) img[i - 1] = p(q(i));
    return Permutation::from_images(std::move(img));
}

/// tau(i) = i-1 for i >= 2 and tau(1) = n, i.e. the cycle (n ... 2 1).
inline Permutation canonical_tau(int n) {
    if (n < 1) throw std::invalid_argument("canonical_tau: n must be positive");
    std::vector<int> img(static_cast<std::size_t>(n));
    img[0] = n;
    for (int i = 2; i <= n; ++i) img[i - 1] = i - 1;
    return Permutation::from_images(std::move(img));
}

/// Number of distinct cycles of p that meet `subset`.
inline int cycles_meeting_subset(const Permutation& p, std::span<const int> subset) {
    const int n = p.size();
    std::vector<int> cycle_id(static_cast<std::size_t>(n), -1);
    int next_id = 0;
    for (int start = 1; start <= n; ++start) {
        if (cycle_id[start - 1] >= 0) continue;
        for (int x = start; cycle_id[x - 1] < 0; x = p(x)) cycle_id[x - 1] = next_id;
        ++next_id;
    }
    std::vector<char> hit(static_cast<std::size_t>(next_id), 0);
    int count = 0;
    for (int e : subset) {
        if (e < 1 || e > n) throw std::invalid_argument("cycles_meeting_subset: element out of range");
        if (!hit[cycle_id[e - 1]]) {
            hit[cycle_id[e - 1]] = 1;
            ++count;
        }
    }
    return count;
}

inline constexpr int kMaxEnumeratedCycleLength = 12;

/// Builds the n-cycle (1 a_2 ... a_n) from the arrangement (a_2, ..., a_n).
inline Permutation ncycle_from_tail(std::span<const int> tail) {
    const int n = static_cast<int>(tail.size()) + 1;
    std::vector<int> img(static_cast<std::size_t>(n));
    int prev = 1;
    for (int a : tail) {
        img[prev - 1] = a;
        prev = a;
    }
    img[prev - 1] = 1;
    return Permutation::from_images(std::move(img));
}

namespace detail {

inline void check_ncycle_guard(int n) {
    if (n < 1 || n > kMaxEnumeratedCycleLength)
        throw std::out_of_range("n-cycle enumeration requires 1 <= n <= " +
                                std::to_string(kMaxEnumeratedCycleLength));
}

// Drives the lexicographic walk over arrangements of {2..n} whose first entry
// (when n >= 2) is `first`; first == 0 means no restriction.
template <class Visit>
void walk_ncycle_tails(int n, int first, Visit&& visit) {
    std::vector<int> tail;
    for (int v = 2; v <= n; ++v) tail.push_back(v);
    if (first != 0) {
        auto it = std::find(tail.begin(), tail.end(), first);
        if (it == tail.end()) throw std::out_of_range("n-cycle prefix outside {2..n}");
        std::rotate(tail.begin(), it, it + 1);
        do visit(std::span<const int>(tail));
        while (std::next_permutation(tail.begin() + 1, tail.end()));
        return;
    }
    do visit(std::span<const int>(tail));
    while (std::next_permutation(tail.begin(), tail.end()));
}

}  // namespace detail

/// Calls f(sigma) for each of the (n-1)! n-cycles, cycles written (1 a_2 ... a_n)
/// over lexicographic arrangements of {2..n}.
template <class F>
void for_each_ncycle(int n, F&& f) {
    detail::check_ncycle_guard(n);
    detail::walk_ncycle_tails(n, 0, [&](std::span<const int> tail) { f(ncycle_from_tail(tail)); });
}

/// The slice of for_each_ncycle whose cycles start (1 first ...). Slices for
/// first = 2..n partition the full stream and preserve its relative order.
template <class F>
void for_each_ncycle_with_successor(int n, int first, F&& f) {
    detail::check_ncycle_guard(n);
    if (n < 2) throw std::out_of_range("n-cycle slicing requires n >= 2");
    detail::walk_ncycle_tails(n, first, [&](std::span<const int> tail) { f(ncycle_from_tail(tail)); });
}

inline std::vector<Permutation> enumerate_ncycles(int n) {
    std::vector<Permutation> out;
    for_each_ncycle(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

// --- sampling -------------------------------------------------------------

using Rng = std::mt19937_64;

/// SplitMix64 step; used to derive independent seeds from one master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform integer in [0, bound) by multiply-shift with rejection (Lemire).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
    std::uint64_t x = rng();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            x = rng();
            m = static_cast<unsigned __int128>(x) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

/// Uniform n-cycle: (1 a_2 ... a_n) with (a_2..a_n) a Fisher-Yates shuffle of {2..n}.
inline Permutation sample_ncycle(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_ncycle: n must be positive");
    std::vector<int> tail;
    tail.reserve(static_cast<std::size_t>(n - 1));
    for (int v = 2; v <= n; ++v) tail.push_back(v);
    for (std::size_t i = tail.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(tail[i - 1], tail[j]);
    }
    return ncycle_from_tail(tail);
}

inline Permutation sample_ncycle(int n, std::uint64_t seed) {
    Rng rng(seed);
    return sample_ncycle(n, rng);
}

}  // namespace cycprod
