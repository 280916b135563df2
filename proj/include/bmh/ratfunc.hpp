#pragma once

#include "bmh/multipoly.hpp"

#include <map>
#include <string>

namespace bmh {

/// Quotient of two MultiPoly values.
///
/// Construction cancels the polynomial gcd and scales the pair so that the
/// denominator is monic in the lexicographic order. Equality is decided by
/// cross-multiplication and does not rely on the reduced form.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    template <std::integral I>
    RatFunc(I c) : RatFunc(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(MultiPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error if den is zero.
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc variable(Var v) { return RatFunc(MultiPoly::variable(v)); }

    const MultiPoly& numerator() const { return num_; }
    const MultiPoly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Polynomial value; throws std::logic_error if the denominator is not constant.
    MultiPoly as_polynomial() const;

    /// Exact value at a point; throws std::domain_error if the denominator vanishes.
    Rational evaluate(const std::map<Var, Rational>& assignment) const;

    RatFunc inverse() const;
    RatFunc pow(unsigned e) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    friend RatFunc operator*(const RatFunc& a, const Rational& c);
    friend RatFunc operator+(const RatFunc& a, const Rational& c) { return a + RatFunc(c); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string str() const;

private:
    struct Reduced {};
    RatFunc(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize(bool reduce);

    MultiPoly num_;
    MultiPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace bmh
