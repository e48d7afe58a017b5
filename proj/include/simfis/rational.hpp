#ifndef SIMFIS_RATIONAL_HPP
#define SIMFIS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace simfis {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
///
/// Invariants (canonical form), re-established after every operation:
///   - denominator > 0; the sign lives in the numerator
///   - gcd(|num|, den) == 1
///   - zero is 0/1
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    friend Rational operator-(const Rational& a) {
        Rational r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    // Comparison by cross-multiplication; exact at any magnitude. Denominators
    // are positive, so the direction of the inequality is preserved.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational reciprocal() const { return Rational(1) / *this; }

    /// Renders "p/q", or just "p" when q == 1.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Accepts "p", "p/q" (q > 0), and finite decimals like "0.25" (converted
    /// exactly). Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    double to_double() const {
        boost::multiprecision::cpp_rational q(num_, den_);
        return q.convert_to<double>();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    void normalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Rational Rational::parse(std::string_view text) {
    const auto fail = [&] {
        throw std::invalid_argument("Rational::parse: bad literal '" + std::string(text) + "'");
    };
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) fail();
    const auto digits = [&](std::string_view d) {
        if (d.empty()) fail();
        for (char c : d)
            if (c < '0' || c > '9') fail();
        return BigInt(std::string(d));
    };

    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        result = Rational(digits(s.substr(0, slash)), digits(s.substr(slash + 1)));
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        const std::string_view frac = s.substr(dot + 1);
        BigInt scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        result = Rational(digits(s.substr(0, dot)) * scale + digits(frac), scale);
    } else {
        result = Rational(digits(s));
    }
    return negative ? -result : result;
}

}  // namespace simfis

#endif  // SIMFIS_RATIONAL_HPP
