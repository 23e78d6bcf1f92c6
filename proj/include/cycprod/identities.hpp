#pragma once

// Direct exact evaluation of the alternating binomial sums used in the
// coalescence proof, plus grid checkers that report the first counterexample.

#include "exact.hpp"
#include "formulas.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cycprod {

/// sum_{t=1}^{b} (-1)^{t-1} (t-1)! S(b,t); equals [b == 1].
inline Rational partition_sum(long long b) {
    if (b < 1) throw std::invalid_argument("partition_sum: b must be positive");
    BigInt total = 0;
    for (long long t = 1; t <= b; ++t) {
        BigInt term = factorial(t - 1) * stirling_second(b, t);
        if (t % 2) total += term;
        else total -= term;
    }
    return Rational(total);
}

/// sum_{r=1-k}^{n+1} (-1)^r C(r,t) C(n+k, r+k-1) C(n-r, k-t); vanishes.
inline Rational lemma_identity_1(long long n, long long k, long long t) {
    if (t < 1 || k < t || n < k) throw std::invalid_argument("lemma_identity_1: requires 1 <= t <= k <= n");
    BigInt total = 0;
    for (long long r = 1 - k; r <= n + 1; ++r) {
        BigInt term = binomial(r, t) * binomial(n + k, r + k - 1) * binomial(n - r, k - t);
        if (r % 2) total -= term;
        else total += term;
    }
    return Rational(total);
}

/// sum_{t>=0} (-1)^t C(p+t-1,t) C(p+1,t), truncated at t = max(p+1, -p)
/// past which one factor is identically zero; equals [p in {-1, 0}].
inline Rational lemma_identity_2(long long p) {
    const long long last = std::max(p + 1, -p);
    BigInt total = 0;
    for (long long t = 0; t <= last; ++t) {
        BigInt term = binomial(p + t - 1, t) * binomial(p + 1, t);
        if (t % 2) total -= term;
        else total += term;
    }
    return Rational(total);
}

namespace detail {

inline void require_pole_range(long long p, long long k, const char* who) {
    if (k < 1 || p < -k || p > k - 1) throw std::invalid_argument(std::string(who) + ": requires -k <= p <= k-1");
}

// sum_{t=t0}^{k} (-1)^t C(p+t-1,t) sum_{r'=0}^{k-1} (-1)^{r'} C(r'+t-1,t) C(p+k,k-1-r') C(p+r',k-t)
inline BigInt pole_double_sum(long long p, long long k, long long t0) {
    BigInt total = 0;
    for (long long t = t0; t <= k; ++t) {
        BigInt inner = 0;
        for (long long rp = 0; rp <= k - 1; ++rp) {
            BigInt term = binomial(rp + t - 1, t) * binomial(p + k, k - 1 - rp) * binomial(p + rp, k - t);
            if (rp % 2) inner -= term;
            else inner += term;
        }
        BigInt term = binomial(p + t - 1, t) * inner;
        if (t % 2) total -= term;
        else total += term;
    }
    return total;
}

}  // namespace detail

/// Double sum over t in [0,k], r' in [0,k-1]; equals (-1)^k [p == -1].
inline Rational lemma_identity_3(long long p, long long k) {
    detail::require_pole_range(p, k, "lemma_identity_3");
    return Rational(detail::pole_double_sum(p, k, 0));
}

/// sum_{r'=0}^{k-1} (-1)^{r'} C(p+k, k-1-r') C(p+r', k);
/// equals (-1)^{k+p} for p > 0, 0 for p = 0, (-1)^{k+p+1} for p < 0.
inline Rational lemma_identity_4(long long p, long long k) {
    detail::require_pole_range(p, k, "lemma_identity_4");
    BigInt total = 0;
    for (long long rp = 0; rp <= k - 1; ++rp) {
        BigInt term = binomial(p + k, k - 1 - rp) * binomial(p + rp, k);
        if (rp % 2) total -= term;
        else total += term;
    }
    return Rational(total);
}

struct FormPair {
    Rational sum_form;
    Rational pf_form;
};

/// A(n,k) as the boundary term of the extended inner sum, and its partial fractions
///   C(2k,k) + 2k sum_{i=1}^{k-1} (-1)^i C(2k-1,k+i) (1/(n-i) - 1/(n+i+1)).
inline FormPair a_decomposition_check(long long n, long long k) {
    detail::require_k_le_n(n, k, "a_decomposition_check");
    BigInt s = 0;
    for (long long t = 1; t <= k; ++t) {
        BigInt term = binomial(n + t - 1, t) * binomial(n + 1, t);
        if (t % 2) s -= term;
        else s += term;
    }
    Rational sum_form = Rational(minus_one_pow(k) * s, binomial(n + k, 2 * k));
    Rational pf = Rational(binomial(2 * k, k));
    for (long long i = 1; i <= k - 1; ++i) {
        Rational diff = Rational(BigInt(1), BigInt(n - i)) - Rational(BigInt(1), BigInt(n + i + 1));
        pf += Rational(BigInt(2 * k * minus_one_pow(i)) * binomial(2 * k - 1, k + i)) * diff;
    }
    return {sum_form, pf};
}

/// B(n,k), the lower boundary block, and its partial fractions
///   2k sum_{i=1}^{k-1} C(2k-1,k+i) (1/(n-i) - 1/(n+i+1)).
inline FormPair b_decomposition_check(long long n, long long k) {
    detail::require_k_le_n(n, k, "b_decomposition_check");
    Rational sum_form(detail::pole_double_sum(n, k, 1), binomial(n + k, 2 * k));
    Rational pf;
    for (long long i = 1; i <= k - 1; ++i) {
        Rational diff = Rational(BigInt(1), BigInt(n - i)) - Rational(BigInt(1), BigInt(n + i + 1));
        pf += Rational(BigInt(2 * k) * binomial(2 * k - 1, k + i)) * diff;
    }
    return {sum_form, pf};
}

/// (A - (-1)^n B) / (k C(2k,k)) from the sum forms.
inline Rational coalescence_from_ab(long long n, long long k) {
    const FormPair a = a_decomposition_check(n, k);
    const FormPair b = b_decomposition_check(n, k);
    return (a.sum_form - Rational(minus_one_pow(n)) * b.sum_form) / Rational(BigInt(k) * binomial(2 * k, k));
}

// --- reports --------------------------------------------------------------

struct Counterexample {
    std::string point;
    Rational lhs;
    Rational rhs;
};

struct IdentityReport {
    std::string name;
    std::string grid;
    long long points_checked = 0;
    long long points_failed = 0;
    std::optional<Counterexample> first_counterexample;

    bool passed() const { return points_failed == 0; }

    void record(const std::string& point, const Rational& lhs, const Rational& rhs) {
        ++points_checked;
        if (lhs == rhs) return;
        ++points_failed;
        if (!first_counterexample) first_counterexample = Counterexample{point, lhs, rhs};
    }
};

namespace detail {

inline IdentityReport make_report(std::string name, std::string grid) {
    IdentityReport rep;
    rep.name = std::move(name);
    rep.grid = std::move(grid);
    return rep;
}

inline std::string point_name(std::initializer_list<std::pair<const char*, long long>> coords) {
    std::string s = "(";
    bool first = true;
    for (const auto& [name, value] : coords) {
        if (!first) s += ", ";
        s += std::string(name) + "=" + std::to_string(value);
        first = false;
    }
    return s + ")";
}

}  // namespace detail

inline IdentityReport verify_partition_sum(long long b_max = 15) {
    IdentityReport rep = detail::make_report("partition_sum", "1 <= b <= " + std::to_string(b_max));
    for (long long b = 1; b <= b_max; ++b)
        rep.record(detail::point_name({{"b", b}}), partition_sum(b), Rational(b == 1 ? 1 : 0));
    return rep;
}

inline IdentityReport verify_lemma_identity_1(long long n_max = 12) {
    IdentityReport rep = detail::make_report("extended_inner_sum_vanishes", "1 <= t <= k <= n <= " + std::to_string(n_max));
    for (long long n = 1; n <= n_max; ++n)
        for (long long k = 1; k <= n; ++k)
            for (long long t = 1; t <= k; ++t)
                rep.record(detail::point_name({{"n", n}, {"k", k}, {"t", t}}), lemma_identity_1(n, k, t), Rational());
    return rep;
}

inline IdentityReport verify_lemma_identity_2(long long p_abs_max = 12) {
    IdentityReport rep = detail::make_report("boundary_series", "|p| <= " + std::to_string(p_abs_max));
    for (long long p = -p_abs_max; p <= p_abs_max; ++p)
        rep.record(detail::point_name({{"p", p}}), lemma_identity_2(p), Rational(p == -1 || p == 0 ? 1 : 0));
    return rep;
}

inline IdentityReport verify_lemma_identity_3(long long k_max = 10) {
    IdentityReport rep = detail::make_report("pole_double_sum", "1 <= k <= " + std::to_string(k_max) + ", -k <= p <= k-1");
    for (long long k = 1; k <= k_max; ++k)
        for (long long p = -k; p <= k - 1; ++p)
            rep.record(detail::point_name({{"p", p}, {"k", k}}), lemma_identity_3(p, k),
                       Rational(p == -1 ? minus_one_pow(k) : 0));
    return rep;
}

inline IdentityReport verify_lemma_identity_4(long long k_max = 10) {
    IdentityReport rep = detail::make_report("pole_single_sum", "1 <= k <= " + std::to_string(k_max) + ", -k <= p <= k-1");
    for (long long k = 1; k <= k_max; ++k)
        for (long long p = -k; p <= k - 1; ++p) {
            int expected = p > 0 ? minus_one_pow(k + p) : (p == 0 ? 0 : minus_one_pow(k + p + 1));
            rep.record(detail::point_name({{"p", p}, {"k", k}}), lemma_identity_4(p, k), Rational(expected));
        }
    return rep;
}

inline IdentityReport verify_a_decomposition(long long n_max = 20) {
    IdentityReport rep = detail::make_report("a_partial_fractions", "1 <= k <= n <= " + std::to_string(n_max));
    for (long long n = 1; n <= n_max; ++n)
        for (long long k = 1; k <= n; ++k) {
            auto [s, pf] = a_decomposition_check(n, k);
            rep.record(detail::point_name({{"n", n}, {"k", k}}), s, pf);
        }
    return rep;
}

inline IdentityReport verify_b_decomposition(long long n_max = 20) {
    IdentityReport rep = detail::make_report("b_partial_fractions", "1 <= k <= n <= " + std::to_string(n_max));
    for (long long n = 1; n <= n_max; ++n)
        for (long long k = 1; k <= n; ++k) {
            auto [s, pf] = b_decomposition_check(n, k);
            rep.record(detail::point_name({{"n", n}, {"k", k}}), s, pf);
        }
    return rep;
}

inline IdentityReport verify_ab_reconstruction(long long n_max = 20) {
    IdentityReport rep = detail::make_report("ab_reconstructs_closed_form", "1 <= k <= n <= " + std::to_string(n_max));
    for (long long n = 1; n <= n_max; ++n)
        for (long long k = 1; k <= n; ++k)
            rep.record(detail::point_name({{"n", n}, {"k", k}}), coalescence_from_ab(n, k), coalescence_closed(n, k));
    return rep;
}

inline std::vector<IdentityReport> verify_all_identities() {
    return {verify_partition_sum(),    verify_lemma_identity_1(), verify_lemma_identity_2(),
            verify_lemma_identity_3(), verify_lemma_identity_4(), verify_a_decomposition(),
            verify_b_decomposition(),  verify_ab_reconstruction()};
}

}  // namespace cycprod
