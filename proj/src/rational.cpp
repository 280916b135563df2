#include "bmh/rational.hpp"

#include <stdexcept>

namespace bmh {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
    s = s.substr(start);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");

    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(text) + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    mpz_class n, d;
    mpz_gcd(n.get_mpz_t(), a.value().get_num_mpz_t(), b.value().get_num_mpz_t());
    mpz_lcm(d.get_mpz_t(), a.value().get_den_mpz_t(), b.value().get_den_mpz_t());
    return Rational(mpq_class(n, d));
}

}  // namespace bmh
