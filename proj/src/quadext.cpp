#include "bmh/quadext.hpp"

#include <stdexcept>

namespace bmh {

void QuadExt::require_same(const QuadExt& o) const {
    if (!(mod_ == o.mod_)) throw std::invalid_argument("QuadExt: operands have different moduli");
}

const Rational& QuadExt::rational_value() const {
    if (!is_rational()) throw std::logic_error("QuadExt: element " + str() + " is not rational");
    return a_;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    require_same(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    require_same(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    require_same(o);
    // (a + b x)(c + d x) = ac + (ad + bc) x + bd x^2,  x^2 = p x + q0
    const Rational bd = b_ * o.b_;
    Rational a = a_ * o.a_ + bd * mod_.q0;
    Rational b = a_ * o.b_ + b_ * o.a_ + bd * mod_.p;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadExt& QuadExt::operator*=(const Rational& c) {
    a_ *= c;
    b_ *= c;
    return *this;
}

QuadExt QuadExt::inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw std::domain_error("QuadExt: inverse of " + str() + " (zero norm)");
    return conj() * n.inverse();
}

QuadExt QuadExt::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    QuadExt result(Rational(1), mod_), base(*this);
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

BigComplex QuadExt::embed(int branch, unsigned bits) const {
    if (branch != 0 && branch != 1) throw std::invalid_argument("QuadExt::embed: branch must be 0 or 1");
    auto roots = complex_roots_of_monic_quadratic(-mod_.p, -mod_.q0, bits);
    const BigComplex& x = branch == 0 ? roots.first : roots.second;
    BigComplex out = x * b_;
    out.re += BigFloat(a_, bits);
    return out;
}

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = a_.is_zero() ? "" : a_.str() + (b_.sign() < 0 ? " - " : " + ");
    const Rational mag = (a_.is_zero() || b_.sign() > 0) ? b_ : -b_;
    if (mag.is_one()) s += "x";
    else if (mag == Rational(-1)) s += "-x";
    else s += mag.str() + "*x";
    return s;
}

}  // namespace bmh
