#include "doctest.h"

#include "bmh/bigcomplex.hpp"
#include "bmh/expr.hpp"
#include "bmh/linalg.hpp"
#include "bmh/multipoly.hpp"
#include "bmh/quadext.hpp"
#include "bmh/ratfunc.hpp"
#include "bmh/reference_data.hpp"
#include "bmh/univariate.hpp"

#include <stdexcept>

using namespace bmh;

namespace {

MultiPoly V(Var v) { return MultiPoly::variable(v); }

}  // namespace

TEST_CASE("Rational stays in lowest terms") {
    const Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(Rational::parse("-254/128") == Rational(-127, 64));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("poly_eval") {
    const MultiPoly X = V(var::x), Yv = V(var::y), Z = V(var::z);
    const MultiPoly g = X.pow(2) + Yv.pow(2) + Z.pow(2) - X * Yv * Z - Rational(4);
    CHECK(g.evaluate({{var::x, 2}, {var::y, 2}, {var::z, 2}}).is_zero());

    SUBCASE("a12 relation cleared of denominators at q=4, m=2") {
        // q^{2m} X12 + 2(q^{2m} - 2), with q^{2m} = q^2 r^2
        const MultiPoly u = (V(var::q) * V(var::r)).pow(2);
        const MultiPoly rel = u * V(var::X(1, 2)) + Rational(2) * (u - Rational(2));
        CHECK(rel.evaluate({{var::q, 4}, {var::r, 4}, {var::X(1, 2), Rational(-127, 64)}}).is_zero());
    }

    CHECK(MultiPoly().evaluate({}).is_zero());
    CHECK(MultiPoly().evaluate({{var::x, 7}}).is_zero());

    SUBCASE("missing variable is named") {
        try {
            (void)g.evaluate({{var::x, 1}, {var::z, 1}});
            FAIL("expected an exception");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("y") != std::string::npos);
        }
    }
}

TEST_CASE("poly_arith") {
    const MultiPoly X = V(var::x), Yv = V(var::y);
    CHECK((X + Rational(1)) * (X - Rational(1)) == X.pow(2) - Rational(1));
    const MultiPoly p = X.pow(3) * Yv - Rational(2, 3) * Yv + Rational(5);
    const MultiPoly zero = p + (-p);
    CHECK(zero.is_zero());
    CHECK(zero.terms().empty());
    CHECK(zero.variables().empty());
    CHECK((X + Yv).pow(2) == X.pow(2) + Rational(2) * X * Yv + Yv.pow(2));
    CHECK((X + Yv).pow(2).str() == "x^2 + 2*x*y + y^2");
}

TEST_CASE("exact division and gcd") {
    const MultiPoly q = V(var::q), r = V(var::r);
    const MultiPoly f = (q * r - Rational(1)) * (q + r + Rational(3));
    const MultiPoly g = (q * r - Rational(1)) * (q - Rational(2)).pow(2);
    CHECK(divide_exact(f, q * r - Rational(1)) == q + r + Rational(3));
    CHECK_FALSE(divide_exact(f, q - Rational(2)).has_value());
    CHECK(gcd(f, g) == q * r - Rational(1));
    CHECK(gcd(f * Rational(3, 7), g * Rational(-5)) == q * r - Rational(1));
    CHECK(gcd(q.pow(3) * r, q * r.pow(2)) == q * r);
    CHECK(gcd(f, Rational(5)) == MultiPoly(1));
}

TEST_CASE("RatFunc cancels and compares by cross-multiplication") {
    const MultiPoly q = V(var::q), r = V(var::r);
    const RatFunc a(q.pow(2) - Rational(1), Rational(2) * q + Rational(2));
    CHECK(a.is_polynomial());
    CHECK(a.as_polynomial() == (q - Rational(1)) * Rational(1, 2));
    const RatFunc b(q, r);
    CHECK(b * RatFunc(r, q) == RatFunc(1));
    CHECK(b + b == RatFunc(Rational(2) * q, r));
    CHECK((b - b).is_zero());
    CHECK_THROWS_AS(RatFunc(q, MultiPoly()), std::domain_error);
    CHECK(RatFunc(q, r).evaluate({{var::q, 3}, {var::r, 6}}) == Rational(1, 2));
}

TEST_CASE("sturm_count") {
    const MultiPoly x = V(var::x);
    CHECK(sturm_count(x.pow(2) - Rational(1), Rational(-2), Rational(2)).count == 2);
    CHECK(sturm_count(x.pow(2) + Rational(1), Rational(-2), Rational(2)).count == 0);

    const auto p9 = sturm_count(reference::a04_degree9_q4m2(), Rational(-2), Rational(2));
    CHECK(p9.count == 1);
    CHECK(p9.shift.is_zero());

    SUBCASE("root at an endpoint is excluded and the shift reported") {
        const auto res = sturm_count(x.pow(2) - Rational(1), Rational(-1), Rational(1));
        CHECK(res.count == 0);
        CHECK(res.shift == Rational(1, 2));
    }
    SUBCASE("shift does not jump over a nearby interior root") {
        // roots 0 and 1/16 on (0, 1): the interior root must survive
        const auto res = sturm_count(x * (x - Rational(1, 16)), Rational(0), Rational(1));
        CHECK(res.count == 1);
        CHECK(res.shift < Rational(1, 16));
    }
    SUBCASE("infinite endpoints") {
        const MultiPoly p = (x - Rational(1)) * (x - Rational(3)) * (x + Rational(5));
        CHECK(sturm_count(p, std::nullopt, std::nullopt).count == 3);
        CHECK(sturm_count(p, Rational(2), std::nullopt).count == 1);
        CHECK(sturm_count(p, std::nullopt, Rational(0)).count == 1);
    }
    SUBCASE("multiple roots are counted once") {
        CHECK(sturm_count((x - Rational(1)).pow(3) * (x + Rational(1)), Rational(-3), Rational(3)).count == 2);
    }
    CHECK_THROWS_AS(sturm_count(MultiPoly(), Rational(0), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(sturm_count(x * V(var::y), Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("resultant") {
    const MultiPoly x = V(var::x), a = V(var::a), b = V(var::b), c = V(var::c);
    CHECK(resultant(x - a, x - b, var::x) == a - b);
    CHECK(resultant(x.pow(2) - Rational(2), x.pow(2) - Rational(2), var::x).is_zero());

    // 3x3 Sylvester matrix [[1, b, 1], [1, c, 0], [0, 1, c]] expanded along the last column:
    // 1*(1*1 - c*0) + c*(1*c - b*1) = 1 + c^2 - b c
    const MultiPoly expected = c.pow(2) - b * c + Rational(1);
    CHECK(resultant(x.pow(2) + b * x + Rational(1), x + c, var::x) == expected);

    CHECK_THROWS_AS(resultant(a, b, var::x), std::invalid_argument);
    CHECK_THROWS_AS(resultant(MultiPoly(), x, var::x), std::invalid_argument);
}

TEST_CASE("quad_ext_arith") {
    SUBCASE("defining relation") {
        const Rational a01(7, 5);
        const auto m = QuadModulus::unimodular(a01);
        const QuadExt x = QuadExt::generator(m);
        CHECK(x * x == QuadExt(Rational(-1), a01, m));
        CHECK(x * x.inverse() == QuadExt(Rational(1), m));
    }
    SUBCASE("family II modulus at q=4, m=2") {
        // a01 = 2(4096 - 384 + 2) / (66 * 64)
        const Rational a01 = Rational(2 * (4096 - 384 + 2)) / Rational(66 * 64);
        CHECK(a01 == Rational(619, 352));
        const QuadExt x = QuadExt::generator(QuadModulus::unimodular(a01));
        CHECK(x + x.inverse() == QuadExt(a01, x.modulus()));
    }
    SUBCASE("zero has no inverse") {
        const auto m = QuadModulus::unimodular(Rational(1, 3));
        CHECK_THROWS_AS(QuadExt(Rational(0), m).inverse(), std::domain_error);
        // x^2 = 1 splits: 1 - x is a zero divisor
        const QuadModulus split{Rational(0), Rational(1)};
        CHECK_THROWS_AS(QuadExt(Rational(1), Rational(-1), split).inverse(), std::domain_error);
    }
    SUBCASE("norm formula") {
        const QuadModulus m{Rational(3, 2), Rational(-5)};
        const QuadExt u(Rational(2), Rational(-7, 3), m);
        CHECK(u * u.conj() == QuadExt(u.norm(), m));
    }
}

TEST_CASE("complex_roots_of_monic_quadratic") {
    const unsigned bits = 256;
    const BigFloat tiny = pow2(-240, bits);

    SUBCASE("double root") {
        auto [r0, r1] = complex_roots_of_monic_quadratic(Rational(-2), Rational(1), bits);
        CHECK(abs(r0.re - BigFloat(1, bits)) < tiny);
        CHECK(abs(r1.re - BigFloat(1, bits)) < tiny);
        CHECK(abs(r0.im) < tiny);
    }
    SUBCASE("family I weight at q=4, m=2") {
        auto [r0, r1] = complex_roots_of_monic_quadratic(Rational(254, 128), Rational(1), bits);
        // (-127 + i sqrt(255)) / 128
        const BigFloat re = BigFloat(-127, bits) / BigFloat(128, bits);
        const BigFloat im = sqrt(BigFloat(255, bits)) / BigFloat(128, bits);
        CHECK(abs(r0.re - re) < tiny);
        CHECK(abs(r0.im - im) < tiny);
        CHECK(abs(r1.im + im) < tiny);
        CHECK(abs(r0.abs() - BigFloat(1, bits)) < tiny);
        CHECK(abs(r1.abs() - BigFloat(1, bits)) < tiny);
    }
    SUBCASE("cube roots of unity") {
        auto [r0, r1] = complex_roots_of_monic_quadratic(Rational(1), Rational(1), bits);
        const BigFloat half = BigFloat(Rational(-1, 2), bits);
        const BigFloat im = sqrt(BigFloat(3, bits)) / BigFloat(2, bits);
        CHECK(abs(r0.re - half) < tiny);
        CHECK(abs(r0.im - im) < tiny);
        CHECK(abs(r1.im + im) < tiny);
    }
}

TEST_CASE("Bareiss determinant and inverse over Q") {
    Matrix<Rational> m(3, 3);
    const int vals[9] = {0, 2, 1, 3, -1, 4, 5, 6, -2};
    for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = vals[i];
    // cofactor expansion along the first row
    const Rational det = Rational(0) * ((-1) * (-2) - 4 * 6) - Rational(2) * (3 * (-2) - 4 * 5) + Rational(1) * (3 * 6 - (-1) * 5);
    CHECK(bareiss_determinant(m) == det);
    auto [inv, d] = bareiss_inverse(m);
    Matrix<Rational> prod = m * inv;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(prod(i, j) == (i == j ? d : Rational(0)));
    CHECK(exact_rank(m) == 3);
}

TEST_CASE("parse_expression") {
    const MultiPoly q = V(var::q), r = V(var::r);
    CHECK(parse_expression("1/2*qm*r*(q-2)", scheme_aliases()) == RatFunc(q * r * r * (q - Rational(2)) * Rational(1, 2)));
    CHECK(parse_expression("-(r+1)*(q-1)") == RatFunc(-(r + Rational(1)) * (q - Rational(1))));
    CHECK(parse_expression("(q^2-1)/(q+1)") == RatFunc(q - Rational(1)));
    CHECK(parse_expression("X01*X34 - 2^3") == RatFunc(V(var::X(0, 1)) * V(var::X(3, 4)) - Rational(8)));
    CHECK_THROWS_AS(parse_expression("q +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("qm"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("(q"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expression("1/(q-q)"), std::invalid_argument);
}
