#include "bmh/bigcomplex.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace bmh {

BigFloat::BigFloat(unsigned bits) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v, unsigned bits) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& v, unsigned bits) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_q(v_, v.value().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

void BigFloat::widen_to(mpfr_prec_t bits) {
    if (bits > mpfr_get_prec(v_)) mpfr_prec_round(v_, bits, MPFR_RNDN);
}

std::string BigFloat::str(int digits) const {
    std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return buf.data();
}

BigFloat BigFloat::operator-() const {
    BigFloat out(*this);
    mpfr_neg(out.v_, out.v_, MPFR_RNDN);
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
    widen_to(mpfr_get_prec(o.v_));
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
    widen_to(mpfr_get_prec(o.v_));
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
    widen_to(mpfr_get_prec(o.v_));
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
    if (o.is_zero()) throw std::domain_error("BigFloat: division by zero");
    widen_to(mpfr_get_prec(o.v_));
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
         : c > 0 ? std::partial_ordering::greater
                 : std::partial_ordering::equivalent;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_sqrt(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigFloat abs(const BigFloat& x) {
    BigFloat out(x.precision());
    mpfr_abs(out.v_, x.v_, MPFR_RNDN);
    return out;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat out(std::max(x.precision(), y.precision()));
    mpfr_hypot(out.v_, x.v_, y.v_, MPFR_RNDN);
    return out;
}

BigFloat pow2(long e, unsigned bits) {
    BigFloat out(1, bits);
    mpfr_mul_2si(out.raw(), out.raw(), e, MPFR_RNDN);
    return out;
}

BigComplex BigComplex::inverse() const {
    const BigFloat d = norm();
    if (d.is_zero()) throw std::domain_error("BigComplex: inverse of zero");
    return {re / d, -im / d};
}

std::string BigComplex::str(int digits) const {
    std::string s = re.str(digits);
    if (im.sign() < 0) s += " - " + (-im).str(digits) + "i";
    else s += " + " + im.str(digits) + "i";
    return s;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    BigFloat r = re * o.re - im * o.im;
    BigFloat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

BigComplex& BigComplex::operator*=(const Rational& c) {
    const BigFloat f(c, precision());
    re *= f;
    im *= f;
    return *this;
}

BigComplex sqrt(const BigComplex& z) {
    const unsigned bits = z.precision();
    if (z.im.is_zero()) {
        if (z.re.sign() >= 0) return {sqrt(z.re), BigFloat(bits)};
        return {BigFloat(bits), sqrt(-z.re)};
    }
    const BigFloat m = z.abs();
    const BigFloat two(2, bits);
    BigFloat re = sqrt((m + z.re) / two);
    BigFloat im = sqrt((m - z.re) / two);
    if (z.im.sign() < 0) im = -im;
    return {std::move(re), std::move(im)};
}

std::pair<BigComplex, BigComplex> complex_roots_of_monic_quadratic(const BigFloat& a1, const BigFloat& a0) {
    const unsigned bits = std::max(a1.precision(), a0.precision());
    const BigFloat two(2, bits), four(4, bits);
    const BigComplex disc(a1 * a1 - four * a0, BigFloat(bits));
    const BigComplex root = sqrt(disc);
    BigComplex first((-a1 + root.re) / two, root.im / two);
    BigComplex second((-a1 - root.re) / two, -root.im / two);
    if (first.im < second.im || (first.im == second.im && first.re < second.re)) std::swap(first, second);
    return {std::move(first), std::move(second)};
}

std::pair<BigComplex, BigComplex> complex_roots_of_monic_quadratic(const Rational& a1, const Rational& a0,
                                                                   unsigned bits) {
    return complex_roots_of_monic_quadratic(BigFloat(a1, bits), BigFloat(a0, bits));
}

}  // namespace bmh
