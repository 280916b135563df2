#include "bmh/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace bmh {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    canonicalize(true);
}

void RatFunc::canonicalize(bool reduce) {
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    if (reduce && !den_.is_constant()) {
        const MultiPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *divide_exact(num_, g);
            den_ = *divide_exact(den_, g);
        }
    }
    const Rational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        const Rational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

MultiPoly RatFunc::as_polynomial() const {
    if (!den_.is_constant()) throw std::logic_error("RatFunc::as_polynomial: not a polynomial: " + str());
    return num_ * den_.constant_value().inverse();
}

Rational RatFunc::evaluate(const std::map<Var, Rational>& assignment) const {
    const Rational d = den_.evaluate(assignment);
    if (d.is_zero()) throw std::domain_error("RatFunc::evaluate: denominator " + den_.str() + " vanishes");
    return num_.evaluate(assignment) / d;
}

RatFunc RatFunc::inverse() const {
    if (num_.is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    RatFunc out(den_, num_, Reduced{});
    out.canonicalize(false);
    return out;
}

RatFunc RatFunc::pow(unsigned e) const {
    RatFunc out(num_.pow(e), den_.pow(e), Reduced{});
    out.canonicalize(false);
    return out;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant() && b.den_.is_constant())
        return RatFunc(a.as_polynomial() + b.as_polynomial());
    const MultiPoly g = gcd(a.den_, b.den_);
    const MultiPoly ea = *divide_exact(a.den_, g);
    const MultiPoly eb = *divide_exact(b.den_, g);
    return RatFunc(a.num_ * eb + b.num_ * ea, a.den_ * eb);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    MultiPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_constant()) {
        const MultiPoly g = gcd(an, bd);
        if (!g.is_constant()) {
            an = *divide_exact(an, g);
            bd = *divide_exact(bd, g);
        }
    }
    if (!ad.is_constant()) {
        const MultiPoly g = gcd(bn, ad);
        if (!g.is_constant()) {
            bn = *divide_exact(bn, g);
            ad = *divide_exact(ad, g);
        }
    }
    RatFunc out(an * bn, ad * bd, RatFunc::Reduced{});
    out.canonicalize(false);
    return out;
}

RatFunc operator*(const RatFunc& a, const Rational& c) {
    if (c.is_zero()) return RatFunc();
    return RatFunc(a.num_ * c, a.den_, RatFunc::Reduced{});
}

std::string RatFunc::str() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

}  // namespace bmh
