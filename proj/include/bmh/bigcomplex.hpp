#pragma once

#include "bmh/rational.hpp"

#include <mpfr.h>

#include <compare>
#include <string>
#include <utility>

namespace bmh {

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMinPrecisionBits = 128;

/// Arbitrary-precision binary float (RAII over mpfr_t). The precision travels
/// with the value; binary operations produce the larger of the two operand
/// precisions. There is no process-wide default.
class BigFloat {
public:
    explicit BigFloat(unsigned bits = kDefaultPrecisionBits);
    BigFloat(long v, unsigned bits);
    BigFloat(const Rational& v, unsigned bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with the given number of significant digits.
    std::string str(int digits = 20) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

    friend BigFloat sqrt(const BigFloat& x);
    friend BigFloat abs(const BigFloat& x);
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y);

private:
    void widen_to(mpfr_prec_t bits);
    mpfr_t v_;
};

/// 2^e at the given precision.
BigFloat pow2(long e, unsigned bits);

/// Complex number with BigFloat parts.
struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(unsigned bits = kDefaultPrecisionBits) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    static BigComplex from_rational(const Rational& r, unsigned bits) { return {BigFloat(r, bits), BigFloat(bits)}; }

    unsigned precision() const { return re.precision() > im.precision() ? re.precision() : im.precision(); }

    BigComplex conj() const { return {re, -im}; }
    BigFloat abs() const { return hypot(re, im); }
    BigFloat norm() const { return re * re + im * im; }
    BigComplex inverse() const;
    std::string str(int digits = 20) const;

    BigComplex operator-() const { return {-re, -im}; }
    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator-=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& operator*=(const Rational& c);

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator*(BigComplex a, const Rational& c) { return a *= c; }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) { return a * b.inverse(); }
    friend BigComplex operator+(BigComplex a, const Rational& c) {
        a.re += BigFloat(c, a.re.precision());
        return a;
    }
};

/// Principal square root.
BigComplex sqrt(const BigComplex& z);

/// Both roots of x^2 + a1*x + a0 = 0. The root with the larger imaginary part
/// comes first (for a real quadratic with complex roots: the one with positive
/// imaginary part); equal imaginary parts are ordered by larger real part.
std::pair<BigComplex, BigComplex> complex_roots_of_monic_quadratic(const BigFloat& a1, const BigFloat& a0);
std::pair<BigComplex, BigComplex> complex_roots_of_monic_quadratic(const Rational& a1, const Rational& a0,
                                                                   unsigned bits = kDefaultPrecisionBits);

}  // namespace bmh
