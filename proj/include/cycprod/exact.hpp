#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cycprod {

using BigInt = boost::multiprecision::cpp_int;

/// (-1)^e for any integer exponent.
constexpr int minus_one_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

/// Reduced fraction with positive denominator. Zero is always 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num) : num_(std::move(num)), den_(1) {}
    Rational(long long num) : num_(num), den_(1) {}
    Rational(int num) : num_(num), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }
    Rational abs() const { return Rational(num_ < 0 ? BigInt(-num_) : num_, den_, already_reduced{}); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    // Both operands are reduced, so equality is structural.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "n" when the denominator is 1, otherwise "n/d".
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    /// Accepts "n", "n/d", optional leading sign on the numerator.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        auto parse_int = [](std::string_view s) {
            if (s.empty()) throw std::invalid_argument("Rational::parse: empty component");
            std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (start == s.size()) throw std::invalid_argument("Rational::parse: missing digits");
            for (std::size_t i = start; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9')
                    throw std::invalid_argument("Rational::parse: bad digit in '" + std::string(s) + "'");
            }
            std::string digits(s[0] == '+' ? s.substr(1) : s);
            return BigInt(digits);
        };
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
        return Rational(parse_int(text.substr(0, slash)), den);
    }

    /// Decimal rendering truncated toward zero after `digits` fractional digits.
    std::string decimal(unsigned digits) const {
        BigInt mag = num_ < 0 ? BigInt(-num_) : num_;
        BigInt whole = mag / den_;
        BigInt rem = mag % den_;
        std::string out = (num_ < 0 ? "-" : "") + whole.str();
        if (digits == 0) return out;
        out += '.';
        for (unsigned i = 0; i < digits; ++i) {
            rem *= 10;
            BigInt d = rem / den_;
            rem %= den_;
            out += static_cast<char>('0' + d.convert_to<int>());
        }
        return out;
    }

    double to_double() const {
        return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    struct already_reduced {};
    Rational(BigInt num, BigInt den, already_reduced) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline BigInt factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt out = 1;
    for (long long i = 2; i <= n; ++i) out *= i;
    return out;
}

/// Generalized binomial a(a-1)...(a-b+1)/b! for any integer a; zero when b < 0.
inline BigInt binomial(long long a, long long b) {
    if (b < 0) return 0;
    // For a >= 0 use the symmetric lower index to keep products short.
    if (a >= 0) {
        if (b > a) return 0;
        if (b > a - b) b = a - b;
    }
    BigInt out = 1;
    for (long long i = 0; i < b; ++i) {
        out *= (a - i);
        out /= (i + 1);  // exact: product of i+1 consecutive integers is divisible by (i+1)!
    }
    return out;
}

namespace detail {

// Triangular memo tables grown on demand. Access is serialized; values are
// returned by copy so callers never hold references into a growing table.
class StirlingTables {
public:
    static StirlingTables& instance() {
        static StirlingTables tables;
        return tables;
    }

    BigInt first_unsigned(long long n, long long k) {
        std::lock_guard lock(mu_);
        grow(first_, n, [this](std::size_t i, std::size_t j) {
            // c(i,j) = c(i-1,j-1) + (i-1) c(i-1,j)
            BigInt v = first_[i - 1][j - 1];
            if (j <= i - 1) v += BigInt(i - 1) * first_[i - 1][j];
            return v;
        });
        return first_[n][k];
    }

    BigInt second(long long n, long long k) {
        std::lock_guard lock(mu_);
        grow(second_, n, [this](std::size_t i, std::size_t j) {
            // S(i,j) = S(i-1,j-1) + j S(i-1,j)
            BigInt v = second_[i - 1][j - 1];
            if (j <= i - 1) v += BigInt(j) * second_[i - 1][j];
            return v;
        });
        return second_[n][k];
    }

private:
    template <class Rec>
    static void grow(std::vector<std::vector<BigInt>>& t, long long n, Rec rec) {
        if (t.empty()) t.push_back({BigInt(1)});
        while (static_cast<long long>(t.size()) <= n) {
            std::size_t i = t.size();
            std::vector<BigInt> row(i + 1, BigInt(0));
            for (std::size_t j = 1; j <= i; ++j) row[j] = rec(i, j);
            t.push_back(std::move(row));
        }
    }

    std::mutex mu_;
    std::vector<std::vector<BigInt>> first_;
    std::vector<std::vector<BigInt>> second_;
};

}  // namespace detail

/// Set partitions of an n-set into k blocks.
inline BigInt stirling_second(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling_second: negative argument");
    if (k > n) return 0;
    return detail::StirlingTables::instance().second(n, k);
}

/// Permutations of an n-set with exactly k cycles.
inline BigInt stirling_first_unsigned(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling_first_unsigned: negative argument");
    if (k > n) return 0;
    return detail::StirlingTables::instance().first_unsigned(n, k);
}

}  // namespace cycprod
