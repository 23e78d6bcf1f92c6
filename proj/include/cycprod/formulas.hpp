#pragma once

#include "exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycprod {

namespace detail {

inline void require_k_le_n(long long n, long long k, const char* who) {
    if (k < 1 || n < k) throw std::invalid_argument(std::string(who) + ": requires 1 <= k <= n");
}

}  // namespace detail

/// Probability that 1..k share a cycle in a product of two uniform n-cycles:
///   1/k + 4(-1)^n / C(2k,k) * sum_{1<=i<=k-1, i !== n mod 2} C(2k-1,k+i) (1/(n+i+1) - 1/(n-i)).
inline Rational coalescence_closed(long long n, long long k) {
    detail::require_k_le_n(n, k, "coalescence_closed");
    Rational sum;
    for (long long i = 1; i <= k - 1; ++i) {
        if ((i - n) % 2 == 0) continue;
        sum += Rational(binomial(2 * k - 1, k + i)) * (Rational(BigInt(1), BigInt(n + i + 1)) -
                                                      Rational(BigInt(1), BigInt(n - i)));
    }
    return Rational(BigInt(1), BigInt(k)) + Rational(BigInt(4 * minus_one_pow(n)), binomial(2 * k, k)) * sum;
}

/// Number of t-colored k-subsets of r-colored n-cycles:
/// C(n+t-1, r+k-1) C(r,t) C(k-1,t-1) n!/(n-r+1).
inline BigInt count_colored_subsets(long long n, long long r, long long k, long long t) {
    if (n < 1 || r < 1 || r > n || k < 1 || k > n || t < 1)
        throw std::invalid_argument("count_colored_subsets: requires 1 <= r,k <= n and t >= 1");
    // t > min(k, r) is allowed and yields 0 through the vanishing binomials.
    BigInt prod = binomial(n + t - 1, r + k - 1) * binomial(r, t) * binomial(k - 1, t - 1) * factorial(n);
    return prod / (n - r + 1);
}

/// (s_1..s_r)-colored n-cycles: n!/(n-r+1).
inline BigInt count_seq_colored(std::span<const int> svector) {
    if (svector.empty()) throw std::invalid_argument("count_seq_colored: empty s-vector");
    long long n = 0;
    for (int s : svector) {
        if (s < 1) throw std::invalid_argument("count_seq_colored: entries must be positive");
        n += s;
    }
    const auto r = static_cast<long long>(svector.size());
    return factorial(n) / (n - r + 1);
}

/// r-colored n-cycles: C(n-1, r-1) n!/(n-r+1).
inline BigInt count_colored(long long n, long long r) {
    if (r < 1 || n < r) throw std::invalid_argument("count_colored: requires 1 <= r <= n");
    return binomial(n - 1, r - 1) * factorial(n) / (n - r + 1);
}

/// The alternating double sum over color counts, evaluated term by term.
inline Rational coalescence_sum(long long n, long long k) {
    detail::require_k_le_n(n, k, "coalescence_sum");
    Rational outer;
    for (long long t = 1; t <= k; ++t) {
        BigInt inner = 0;
        for (long long r = 1; r <= n; ++r) {
            BigInt term = count_colored_subsets(n, r, k, t);
            if (r % 2) inner -= term;
            else inner += term;
        }
        outer += Rational(inner, BigInt(t));
    }
    return Rational(BigInt(minus_one_pow(n)), factorial(n - 1) * binomial(n, k)) * outer;
}

/// 1/k - 1/(n(n+1)) - (-1)^k / C(n-1,k-1) * sum_{i=0}^{n-k} (-1)^i C(n-1,i) / (i+k+1).
inline Rational bona_pittel(long long n, long long k) {
    detail::require_k_le_n(n, k, "bona_pittel");
    Rational sum;
    for (long long i = 0; i <= n - k; ++i)
        sum += Rational(binomial(n - 1, i) * minus_one_pow(i), BigInt(i + k + 1));
    return Rational(BigInt(1), BigInt(k)) - Rational(BigInt(1), BigInt(n * (n + 1))) -
           Rational(BigInt(minus_one_pow(k)), binomial(n - 1, k - 1)) * sum;
}

/// Probability that 1..k lie in k distinct cycles.
inline Rational separation_probability(long long n, long long k) {
    if (k < 2 || n < k) throw std::invalid_argument("separation_probability: requires 2 <= k <= n");
    Rational base(BigInt(1), factorial(k));
    if ((n - k) % 2 != 0) return base;
    return base + Rational(BigInt(2), factorial(k - 2) * (n - k + 1) * (n + k));
}

/// Distribution of the cycle count nu of a product of two uniform n-cycles:
/// 2 c(n+1, nu)/(n+1)! when nu has the parity of n, otherwise 0.
inline std::map<int, Rational> kwak_lee_cycle_distribution(int n) {
    if (n < 1) throw std::invalid_argument("kwak_lee_cycle_distribution: n must be positive");
    std::map<int, Rational> dist;
    const BigInt total = factorial(n + 1);
    for (int nu = 1; nu <= n; ++nu) {
        if ((nu - n) % 2 != 0) dist[nu] = Rational();
        else dist[nu] = Rational(2 * stirling_first_unsigned(n + 1, nu), total);
    }
    return dist;
}

// --- partial fractions ----------------------------------------------------

/// coefficient / (n - pole)
struct PoleTerm {
    long long pole = 0;
    Rational coefficient;
    friend bool operator==(const PoleTerm&, const PoleTerm&) = default;
};

struct PartialFractionRow {
    Rational constant;
    std::vector<PoleTerm> terms;  // ordered by decreasing pole

    Rational evaluate(long long n) const {
        Rational v = constant;
        for (const auto& term : terms) {
            if (n == term.pole) throw std::domain_error("PartialFractionRow::evaluate: n is a pole");
            v += term.coefficient / Rational(BigInt(n - term.pole));
        }
        return v;
    }

    friend bool operator==(const PartialFractionRow&, const PartialFractionRow&) = default;
};

struct PartialFractionTable {
    PartialFractionRow even;
    PartialFractionRow odd;
};

/// Closed-form coalescence probability for fixed k as a function of n, split by the parity of n.
inline PartialFractionTable partial_fraction_table(long long k) {
    if (k < 1) throw std::invalid_argument("partial_fraction_table: k must be positive");
    auto row_for = [k](int parity) {
        PartialFractionRow row;
        row.constant = Rational(BigInt(1), BigInt(k));
        const int sign = parity == 0 ? 1 : -1;  // (-1)^n
        const Rational scale(BigInt(4 * sign), binomial(2 * k, k));
        for (long long i = 1; i <= k - 1; ++i) {
            if ((i - parity) % 2 == 0) continue;
            const Rational c = scale * Rational(binomial(2 * k - 1, k + i));
            row.terms.push_back({-(i + 1), c});  // + c/(n+i+1)
            row.terms.push_back({i, -c});        // - c/(n-i)
        }
        std::sort(row.terms.begin(), row.terms.end(),
                  [](const PoleTerm& a, const PoleTerm& b) { return a.pole > b.pole; });
        return row;
    };
    return {row_for(0), row_for(1)};
}

/// Human rendering in the style "1/2 - (2/3)/(n-1) + (2/3)/(n+2)".
inline std::string render_row(const PartialFractionRow& row) {
    std::string out = row.constant.str();
    for (const auto& term : row.terms) {
        const Rational mag = term.coefficient.abs();
        out += term.coefficient.sign() < 0 ? " - " : " + ";
        out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
        out += "/(n";
        if (term.pole > 0) out += "-" + std::to_string(term.pole);
        else if (term.pole < 0) out += "+" + std::to_string(-term.pole);
        out += ")";
    }
    return out;
}

}  // namespace cycprod
