#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace bmh {

/// Exact rational number backed by GMP. Always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& v) : v_(v) {}

    /// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input
    /// or a zero denominator.
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;
    Rational pow(unsigned e) const;

    /// Nearest double; for diagnostics only.
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
    mpq_class v_{0};
};

/// gcd of two rationals in the sense gcd(a/b, c/d) = gcd(a,c)/lcm(b,d); always >= 0.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace bmh
