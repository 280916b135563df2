#pragma once

#include "bmh/bigcomplex.hpp"
#include "bmh/rational.hpp"

#include <string>

namespace bmh {

/// Defining relation x^2 = p*x + q0 of a quadratic extension Q[x]/(x^2 - p*x - q0).
struct QuadModulus {
    Rational p;
    Rational q0;

    /// Modulus of a root of x^2 - a*x + 1, i.e. a unimodular w with w + 1/w = a
    /// whenever -2 < a < 2.
    static QuadModulus unimodular(const Rational& a) { return {a, Rational(-1)}; }

    /// p^2 + 4*q0; the extension is a field iff this is not a rational square.
    Rational discriminant() const { return p * p + Rational(4) * q0; }

    friend bool operator==(const QuadModulus&, const QuadModulus&) = default;
};

/// Element a + b*x of Q[x]/(x^2 - p*x - q0).
class QuadExt {
public:
    QuadExt(Rational a, Rational b, QuadModulus mod) : a_(std::move(a)), b_(std::move(b)), mod_(std::move(mod)) {}
    QuadExt(const Rational& a, const QuadModulus& mod) : QuadExt(a, Rational(0), mod) {}

    /// The class of x itself.
    static QuadExt generator(const QuadModulus& mod) { return {Rational(0), Rational(1), mod}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const QuadModulus& modulus() const { return mod_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    /// Value of a rational element; throws std::logic_error otherwise.
    const Rational& rational_value() const;

    /// Galois conjugate a + b*x' where x' = p - x is the other root.
    QuadExt conj() const { return {a_ + b_ * mod_.p, -b_, mod_}; }
    /// (a + b x)(a + b x') = a^2 + a*b*p - b^2*q0.
    Rational norm() const { return a_ * a_ + a_ * b_ * mod_.p - b_ * b_ * mod_.q0; }
    Rational trace() const { return Rational(2) * a_ + b_ * mod_.p; }

    /// Throws std::domain_error when the norm vanishes (zero or a zero divisor).
    QuadExt inverse() const;
    QuadExt pow(int e) const;

    /// Image under x -> root number `branch` of x^2 - p x - q0, with roots
    /// ordered as in complex_roots_of_monic_quadratic (branch 0 has the larger
    /// imaginary part).
    BigComplex embed(int branch, unsigned bits = kDefaultPrecisionBits) const;

    QuadExt operator-() const { return {-a_, -b_, mod_}; }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator*=(const Rational& c);

    friend QuadExt operator+(QuadExt u, const QuadExt& v) { return u += v; }
    friend QuadExt operator-(QuadExt u, const QuadExt& v) { return u -= v; }
    friend QuadExt operator*(QuadExt u, const QuadExt& v) { return u *= v; }
    friend QuadExt operator*(QuadExt u, const Rational& c) { return u *= c; }
    friend QuadExt operator/(const QuadExt& u, const QuadExt& v) { return u * v.inverse(); }
    friend QuadExt operator+(QuadExt u, const Rational& c) {
        u.a_ += c;
        return u;
    }

    friend bool operator==(const QuadExt&, const QuadExt&) = default;

    std::string str() const;

private:
    void require_same(const QuadExt& o) const;

    Rational a_;
    Rational b_;
    QuadModulus mod_;
};

}  // namespace bmh
