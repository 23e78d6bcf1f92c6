#pragma once

#include "permutation.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycprod {

/// An n-cycle sigma with a surjective coloring of {1..n} by {1..r} such that
/// every cycle of sigma o tau is monochromatic. colors[i-1] is the color of i.
struct ColoredCycle {
    Permutation sigma;
    std::vector<int> colors;

    int size() const { return sigma.size(); }
    int num_colors() const { return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()); }
    int color_of(int element) const { return colors[element - 1]; }

    friend bool operator==(const ColoredCycle&, const ColoredCycle&) = default;
    friend auto operator<=>(const ColoredCycle&, const ColoredCycle&) = default;
};

/// Never throws; any structural problem yields false.
inline bool validate_colored_cycle(const Permutation& sigma, std::span<const int> colors) {
    const int n = sigma.size();
    if (n < 1 || static_cast<int>(colors.size()) != n) return false;
    if (sigma.cycle_count() != 1) return false;
    int r = 0;
    for (int c : colors) {
        if (c < 1) return false;
        r = std::max(r, c);
    }
    std::vector<char> used(static_cast<std::size_t>(r), 0);
    for (int c : colors) used[c - 1] = 1;
    if (std::find(used.begin(), used.end(), 0) != used.end()) return false;
    const Permutation product = compose(sigma, canonical_tau(n));
    for (int i = 1; i <= n; ++i) {
        if (colors[product(i) - 1] != colors[i - 1]) return false;
    }
    return true;
}

inline bool validate_colored_cycle(const ColoredCycle& c) { return validate_colored_cycle(c.sigma, c.colors); }

/// Color multiplicities (s_1, ..., s_r).
inline std::vector<int> svector_of(const ColoredCycle& c) {
    std::vector<int> s(static_cast<std::size_t>(c.num_colors()), 0);
    for (int col : c.colors) ++s[col - 1];
    return s;
}

inline constexpr int kMaxColoredCycleLength = 7;
inline constexpr int kMaxColoredSubsetLength = 6;

namespace detail {

// Odometer over all maps {0..slots-1} -> {1..r} that hit every value.
template <class F>
void for_each_surjection(int slots, int r, F&& f) {
    if (r > slots) return;
    std::vector<int> digits(static_cast<std::size_t>(slots), 1);
    std::vector<int> hits(static_cast<std::size_t>(r) + 1, 0);
    while (true) {
        std::fill(hits.begin(), hits.end(), 0);
        int distinct = 0;
        for (int d : digits) distinct += (hits[d]++ == 0);
        if (distinct == r) f(std::span<const int>(digits));
        int pos = slots - 1;
        while (pos >= 0 && digits[pos] == r) digits[pos--] = 1;
        if (pos < 0) return;
        ++digits[pos];
    }
}

// Calls f(span of k sorted 1-based elements) for every k-subset of {1..n}.
template <class F>
void for_each_subset(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i + 1;
    while (true) {
        f(std::span<const int>(pick));
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i + 1) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

// Calls f(parts) for each composition of n into r positive parts. Cut points
// are an (r-1)-subset of {1..n-1}.
template <class F>
void for_each_composition(int n, int r, F&& f) {
    if (r < 1 || n < r) return;
    std::vector<int> parts(static_cast<std::size_t>(r));
    for_each_subset(n - 1, r - 1, [&](std::span<const int> cuts) {
        int prev = 0;
        for (int i = 0; i < r - 1; ++i) {
            parts[i] = cuts[i] - prev;
            prev = cuts[i];
        }
        parts[r - 1] = n - prev;
        f(std::span<const int>(parts));
    });
}

}  // namespace detail

/// Every r-colored n-cycle exactly once. Colors are assigned per cycle of
/// sigma o tau (monochromatic by construction), surjectively onto {1..r}.
template <class F>
void for_each_colored_cycle(int n, int r, F&& f) {
    if (n < 1 || n > kMaxColoredCycleLength || r < 1 || r > n)
        throw std::out_of_range("colored cycle enumeration requires 1 <= r <= n <= " +
                                std::to_string(kMaxColoredCycleLength));
    const Permutation tau = canonical_tau(n);
    for_each_ncycle(n, [&](const Permutation& sigma) {
        const CycleDecomposition orbits = compose(sigma, tau).cycles();
        detail::for_each_surjection(static_cast<int>(orbits.size()), r, [&](std::span<const int> assign) {
            ColoredCycle c{sigma, std::vector<int>(static_cast<std::size_t>(n))};
            for (std::size_t o = 0; o < orbits.size(); ++o)
                for (int x : orbits[o]) c.colors[x - 1] = assign[o];
            f(c);
        });
    });
}

inline std::vector<ColoredCycle> enumerate_colored_cycles(int n, int r) {
    std::vector<ColoredCycle> out;
    for_each_colored_cycle(n, r, [&](const ColoredCycle& c) { out.push_back(c); });
    return out;
}

/// A k-subset of {1..n} (sorted) on a colored cycle.
struct ColoredSubsetInstance {
    ColoredCycle base;
    std::vector<int> subset;

    int distinct_colors() const {
        std::set<int> seen;
        for (int e : subset) seen.insert(base.color_of(e));
        return static_cast<int>(seen.size());
    }

    friend bool operator==(const ColoredSubsetInstance&, const ColoredSubsetInstance&) = default;
    friend auto operator<=>(const ColoredSubsetInstance&, const ColoredSubsetInstance&) = default;
};

/// All t-colored k-subsets of r-colored n-cycles. Empty when t > min(k, r).
template <class F>
void for_each_colored_subset_instance(int n, int r, int k, int t, F&& f) {
    if (n < 1 || n > kMaxColoredSubsetLength || r < 1 || r > n || k < 1 || k > n || t < 1)
        throw std::out_of_range("colored subset enumeration requires 1 <= r,k <= n <= " +
                                std::to_string(kMaxColoredSubsetLength) + " and t >= 1");
    if (t > std::min(k, r)) return;
    for_each_colored_cycle(n, r, [&](const ColoredCycle& c) {
        detail::for_each_subset(n, k, [&](std::span<const int> subset) {
            ColoredSubsetInstance inst{c, std::vector<int>(subset.begin(), subset.end())};
            if (inst.distinct_colors() == t) f(inst);
        });
    });
}

/// A nondecreasing surjective coloring of positions 1..n, optionally with a
/// set of marked positions (sorted, 1-based).
struct ColoredStrip {
    std::vector<int> colors;
    std::optional<std::vector<int>> marked;

    int size() const { return static_cast<int>(colors.size()); }
    int num_colors() const { return colors.empty() ? 0 : colors.back(); }

    /// Block lengths, i.e. the multiplicity of each color.
    std::vector<int> block_sizes() const {
        std::vector<int> s(static_cast<std::size_t>(num_colors()), 0);
        for (int c : colors) ++s[c - 1];
        return s;
    }

    int marked_color_count() const {
        if (!marked) return 0;
        std::set<int> seen;
        for (int p : *marked) seen.insert(colors[p - 1]);
        return static_cast<int>(seen.size());
    }

    static ColoredStrip from_blocks(std::span<const int> blocks) {
        ColoredStrip s;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            s.colors.insert(s.colors.end(), static_cast<std::size_t>(blocks[i]), static_cast<int>(i) + 1);
        return s;
    }

    friend bool operator==(const ColoredStrip&, const ColoredStrip&) = default;
    friend auto operator<=>(const ColoredStrip&, const ColoredStrip&) = default;
};

inline bool validate_strip(const ColoredStrip& s) {
    if (s.colors.empty() || s.colors.front() != 1) return false;
    for (std::size_t i = 1; i < s.colors.size(); ++i) {
        int step = s.colors[i] - s.colors[i - 1];
        if (step != 0 && step != 1) return false;
    }
    if (s.marked) {
        for (std::size_t i = 0; i < s.marked->size(); ++i) {
            int p = (*s.marked)[i];
            if (p < 1 || p > s.size()) return false;
            if (i > 0 && (*s.marked)[i - 1] >= p) return false;
        }
    }
    return true;
}

inline constexpr int kMaxStripLength = 7;

/// Every r-colored n-strip with a marked k-subset carrying exactly t colors.
template <class F>
void for_each_marked_strip(int n, int r, int k, int t, F&& f) {
    if (n < 1 || n > kMaxStripLength || r < 1 || r > n || k < 1 || k > n || t < 1)
        throw std::out_of_range("marked strip enumeration requires 1 <= r,k <= n <= " +
                                std::to_string(kMaxStripLength) + " and t >= 1");
    if (t > std::min(k, r)) return;
    detail::for_each_composition(n, r, [&](std::span<const int> blocks) {
        ColoredStrip base = ColoredStrip::from_blocks(blocks);
        detail::for_each_subset(n, k, [&](std::span<const int> marks) {
            ColoredStrip s = base;
            s.marked = std::vector<int>(marks.begin(), marks.end());
            if (s.marked_color_count() == t) f(s);
        });
    });
}

}  // namespace cycprod
