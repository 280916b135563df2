#include "doctest.h"

#include "bmh/multipoly.hpp"
#include "bmh/quadext.hpp"
#include "bmh/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace bmh;

namespace {

constexpr int kTrials = 1000;

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

    Rational rational() {
        long num = integer(-9, 9);
        long den = integer(1, 6);
        return Rational(num, den);
    }

    Rational nonzero_rational() {
        Rational v;
        do v = rational();
        while (v.is_zero());
        return v;
    }

    // At most six variables drawn from the table, total degree <= 8.
    MultiPoly poly(const std::vector<Var>& pool, int max_terms = 5) {
        MultiPoly p;
        const int terms = static_cast<int>(integer(0, max_terms));
        for (int t = 0; t < terms; ++t) {
            std::vector<std::pair<Var, unsigned>> powers;
            int budget = static_cast<int>(integer(0, 8));
            for (Var v : pool) {
                if (budget == 0) break;
                const int e = static_cast<int>(integer(0, std::min(budget, 3)));
                if (e > 0) powers.emplace_back(v, e);
                budget -= e;
            }
            p += MultiPoly::monomial(rational(), powers);
        }
        return p;
    }
};

const std::vector<Var> kPool{var::X(0, 1), var::X(2, 3), var::q, var::r, var::x, var::y};

std::map<Var, Rational> random_point(Gen& g) {
    std::map<Var, Rational> pt;
    for (Var v : kPool) pt[v] = g.rational();
    return pt;
}

long double horner(const std::vector<Rational>& c, long double x) {
    long double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + static_cast<long double>(it->to_double());
    return acc;
}

}  // namespace

TEST_CASE("ring axioms hold for random polynomials") {
    Gen g(0x5eed01);
    for (int trial = 0; trial < kTrials; ++trial) {
        const MultiPoly a = g.poly(kPool), b = g.poly(kPool), c = g.poly(kPool);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - a).is_zero());
        REQUIRE(a * MultiPoly(1) == a);
        REQUIRE((a * MultiPoly()).is_zero());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Gen g(0x5eed02);
    for (int trial = 0; trial < kTrials; ++trial) {
        const MultiPoly a = g.poly(kPool), b = g.poly(kPool);
        const auto pt = random_point(g);
        REQUIRE((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        REQUIRE((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        REQUIRE((-a).evaluate(pt) == -a.evaluate(pt));
    }
}

TEST_CASE("exact division recovers a known factor") {
    Gen g(0x5eed03);
    for (int trial = 0; trial < kTrials; ++trial) {
        const MultiPoly a = g.poly(kPool, 4);
        MultiPoly b = g.poly(kPool, 4);
        if (b.is_zero()) b = MultiPoly(g.nonzero_rational());
        const auto q = divide_exact(a * b, b);
        REQUIRE(q.has_value());
        REQUIRE(*q == a);
    }
}

TEST_CASE("gcd contains a planted common factor") {
    Gen g(0x5eed04);
    const std::vector<Var> pool{var::q, var::r, var::x};
    for (int trial = 0; trial < kTrials / 10; ++trial) {
        MultiPoly h = g.poly(pool, 3);
        if (h.is_constant()) h += MultiPoly::variable(var::q);
        const MultiPoly a = g.poly(pool, 3) + Rational(1), b = g.poly(pool, 3) - Rational(1);
        const MultiPoly d = gcd(a * h, b * h);
        REQUIRE(divide_exact(d, h).has_value());
        REQUIRE(divide_exact(a * h, d).has_value());
        REQUIRE(divide_exact(b * h, d).has_value());
    }
}

TEST_CASE("sturm_count agrees with a dense sign scan") {
    Gen g(0x5eed05);
    const MultiPoly x = MultiPoly::variable(var::x);
    for (int trial = 0; trial < kTrials; ++trial) {
        // simple real roots on a grid of spacing 1/2, times a factor without real roots
        const int k = static_cast<int>(g.integer(0, 6));
        std::set<long> slots;
        while (static_cast<int>(slots.size()) < k) slots.insert(g.integer(-30, 30));
        MultiPoly p(g.nonzero_rational());
        for (long s : slots) p *= x - Rational(s, 2);
        if (g.integer(0, 1)) p *= x.pow(2) + Rational(g.integer(1, 9), 4);

        // endpoints on the quarter grid, off the half grid, so never a root
        const long lo4 = 2 * g.integer(-40, 30) + 1;
        const long hi4 = lo4 + 2 * g.integer(1, 40);
        const Rational lo(lo4, 4), hi(hi4, 4);

        const auto res = sturm_count(p, lo, hi);
        REQUIRE(res.shift.is_zero());

        const auto coeffs = dense_coefficients(p);
        const int steps = 10000;
        const long double a = lo.to_double(), b = hi.to_double();
        std::size_t changes = 0;
        long double prev = horner(coeffs, a);
        for (int i = 1; i <= steps; ++i) {
            const long double cur = horner(coeffs, a + (b - a) * i / steps);
            if ((prev < 0) != (cur < 0)) ++changes;
            prev = cur;
        }
        REQUIRE(res.count == changes);
    }
}

TEST_CASE("resultant commutes with specialization") {
    Gen g(0x5eed06);
    const MultiPoly x = MultiPoly::variable(var::x);
    const std::vector<Var> params{var::a, var::b};
    for (int trial = 0; trial < kTrials; ++trial) {
        // leading coefficients are nonzero constants, so degrees survive specialization
        auto make = [&](int deg) {
            MultiPoly p = Rational(g.nonzero_rational()) * x.pow(deg);
            for (int k = 0; k < deg; ++k) p += g.poly(params, 2) * x.pow(k);
            return p;
        };
        const MultiPoly f = make(static_cast<int>(g.integer(1, 3)));
        const MultiPoly h = make(static_cast<int>(g.integer(1, 3)));
        const std::map<Var, Rational> pt{{var::a, g.rational()}, {var::b, g.rational()}};
        const std::map<Var, MultiPoly> images{{var::a, pt.at(var::a)}, {var::b, pt.at(var::b)}};
        const Rational lhs = resultant(f, h, var::x).substitute(images).constant_value();
        const Rational rhs = resultant(f.substitute(images), h.substitute(images), var::x).constant_value();
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("complex embedding of the quadratic extension is a homomorphism") {
    Gen g(0x5eed07);
    const unsigned bits = 256;
    const BigFloat tol = BigFloat(Rational(1, 100000), bits) * pow2(-50, bits);  // below 1e-20
    for (int trial = 0; trial < kTrials; ++trial) {
        QuadModulus mod{g.rational(), g.rational()};
        if (!(mod.discriminant() < Rational(0))) mod.q0 = -(mod.p * mod.p) / Rational(4) - Rational(1);
        const QuadExt u(g.rational(), g.rational(), mod), v(g.rational(), g.rational(), mod);
        const int branch = static_cast<int>(g.integer(0, 1));
        const BigComplex eu = u.embed(branch, bits), ev = v.embed(branch, bits);
        const BigComplex prod = (u * v).embed(branch, bits) - eu * ev;
        const BigComplex sum = (u + v).embed(branch, bits) - (eu + ev);
        REQUIRE(prod.abs() < tol);
        REQUIRE(sum.abs() < tol);
        if (!u.is_zero()) REQUIRE((u.inverse().embed(branch, bits) * eu - BigComplex::from_rational(1, bits)).abs() < tol);
        const BigComplex conj = u.conj().embed(branch, bits) - u.embed(1 - branch, bits);
        REQUIRE(conj.abs() < tol);
    }
}
