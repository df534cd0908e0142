#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace lenz {

using BigInt = boost::multiprecision::cpp_int;

/// Raised for violated preconditions (division by zero, dimension mismatch, bad ranges).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact fraction num/den, always kept with den > 0 and gcd(|num|, den) = 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by intent
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw domain_error("rational with zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }

    Rational& operator+=(const Rational& o) {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw domain_error("rational division by zero");
        BigInt n = num_ * o.den_;
        BigInt d = den_ * o.num_;
        num_ = std::move(n);
        den_ = std::move(d);
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

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

    /// "num/den", or just "num" when den == 1.
    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    static Rational parse(std::string_view text);

    long double to_long_double() const {
        return num_.convert_to<long double>() / den_.convert_to<long double>();
    }

    /// Exact square root when this is the square of a rational.
    bool exact_sqrt(Rational& out) const;

private:
    struct raw_tag {};
    Rational(BigInt num, BigInt den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

namespace detail {

inline BigInt parse_bigint(std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw domain_error("malformed integer: '" + std::string(s) + "'");
    for (char c : digits) {
        if (c < '0' || c > '9') throw domain_error("malformed integer: '" + std::string(s) + "'");
    }
    BigInt v{std::string(digits)};
    return (!s.empty() && s.front() == '-') ? BigInt(-v) : v;
}

inline bool exact_isqrt(const BigInt& v, BigInt& root) {
    if (v < 0) return false;
    root = boost::multiprecision::sqrt(v);
    return root * root == v;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(detail::parse_bigint(text));
    return Rational(detail::parse_bigint(text.substr(0, slash)),
                    detail::parse_bigint(text.substr(slash + 1)));
}

inline bool Rational::exact_sqrt(Rational& out) const {
    BigInt rn, rd;
    if (!detail::exact_isqrt(num_, rn) || !detail::exact_isqrt(den_, rd)) return false;
    out = Rational(rn, rd);
    return true;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

/// Element a + b*sqrt(3) of the quadratic field Q(sqrt 3).
class Quad3 {
public:
    Quad3() = default;
    Quad3(long long a) : a_(a) {}  // NOLINT
    Quad3(Rational a) : a_(std::move(a)) {}  // NOLINT
    Quad3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Quad3 sqrt3() { return Quad3(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt3_part() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// a - b*sqrt(3)
    Quad3 conjugate() const { return Quad3(a_, -b_); }
    /// (a + b sqrt3)(a - b sqrt3) = a^2 - 3 b^2
    Rational norm() const { return a_ * a_ - Rational(3) * b_ * b_; }

    /// Exact sign of the real number a + b*sqrt(3).
    int sign() const {
        int sa = a_.sign();
        int sb = b_.sign();
        if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
        if (sa <= 0 && sb <= 0) return -1;
        // opposite signs: compare a^2 against 3 b^2
        Rational aa = a_ * a_;
        Rational bb3 = Rational(3) * b_ * b_;
        int cmp = aa < bb3 ? -1 : (aa == bb3 ? 0 : 1);
        return sa > 0 ? cmp : -cmp;
    }

    Quad3 operator-() const { return Quad3(-a_, -b_); }
    Quad3& operator+=(const Quad3& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    Quad3& operator-=(const Quad3& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    Quad3& operator*=(const Quad3& o) {
        Rational a = a_ * o.a_ + Rational(3) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    Quad3& operator/=(const Quad3& o) {
        if (o.is_zero()) throw domain_error("Q(sqrt3) division by zero");
        Rational n = o.norm();  // nonzero: sqrt3 is irrational
        *this *= o.conjugate();
        a_ /= n;
        b_ /= n;
        return *this;
    }

    Quad3 inverse() const { return Quad3(1) /= *this; }

    friend Quad3 operator+(Quad3 x, const Quad3& y) { return x += y; }
    friend Quad3 operator-(Quad3 x, const Quad3& y) { return x -= y; }
    friend Quad3 operator*(Quad3 x, const Quad3& y) { return x *= y; }
    friend Quad3 operator/(Quad3 x, const Quad3& y) { return x /= y; }

    friend bool operator==(const Quad3& x, const Quad3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend std::strong_ordering operator<=>(const Quad3& x, const Quad3& y) {
        int s = (x - y).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "a+b*rt3", both parts in rational form (b may carry its own minus sign).
    std::string to_string() const { return a_.to_string() + "+" + b_.to_string() + "*rt3"; }

    /// Accepts "a+b*rt3" or a bare rational "a".
    static Quad3 parse(std::string_view text) {
        constexpr std::string_view suffix = "*rt3";
        if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix) {
            return Quad3(Rational::parse(text));
        }
        std::string_view body = text.substr(0, text.size() - suffix.size());
        // split at the '+' that separates the parts; skip a leading sign on a
        auto plus = body.find('+', 1);
        if (plus == std::string_view::npos) throw domain_error("malformed Q(sqrt3) value: '" + std::string(text) + "'");
        return Quad3(Rational::parse(body.substr(0, plus)), Rational::parse(body.substr(plus + 1)));
    }

    long double to_long_double() const {
        static const long double kSqrt3 = 1.732050807568877293527446341505872366943L;
        return a_.to_long_double() + b_.to_long_double() * kSqrt3;
    }

private:
    Rational a_;
    Rational b_;
};

inline std::ostream& operator<<(std::ostream& os, const Quad3& x) { return os << x.to_string(); }

/// cos(step * 30deg) for step taken modulo 12.
inline Quad3 cos30(int step) {
    step = ((step % 12) + 12) % 12;
    const Rational half(1, 2);
    switch (step) {
        case 0: return Quad3(1);
        case 1: return Quad3(Rational(0), half);
        case 2: return Quad3(half);
        case 3: return Quad3(0);
        case 4: return Quad3(-half);
        case 5: return Quad3(Rational(0), -half);
        case 6: return Quad3(-1);
        case 7: return Quad3(Rational(0), -half);
        case 8: return Quad3(-half);
        case 9: return Quad3(0);
        case 10: return Quad3(half);
        default: return Quad3(Rational(0), half);
    }
}

/// sin(step * 30deg) = cos((step - 3) * 30deg).
inline Quad3 sin30(int step) { return cos30(step - 3); }

/// Binomial coefficient C(n, k) as an exact integer; zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt acc = 1;
    for (long long i = 1; i <= k; ++i) {
        acc *= (n - k + i);
        acc /= i;
    }
    return acc;
}

}  // namespace lenz
