#include "doctest.h"

#include "bmh/gram.hpp"

#include <random>

using namespace bmh;

namespace {

constexpr unsigned kBits = 256;

const IntersectionTensor& tensor() {
    static const IntersectionTensor t = intersection_tensor(build_eigen());
    return t;
}

const std::vector<std::pair<long, long>> kGrid{{4, 2}, {4, 3}, {8, 2}, {8, 3}, {16, 2}, {16, 3}, {32, 2}, {32, 3}};

BigFloat tiny() { return pow2(-100, kBits); }

// w_k = alpha^k where alpha is the root of x^2 - a x + 1 with positive imaginary part.
WNumeric powers_of_root(const Rational& a) {
    const BigComplex alpha = complex_roots_of_monic_quadratic(-a, Rational(1), kBits).first;
    WNumeric w;
    w[0] = BigComplex::from_rational(1, kBits);
    for (int k = 1; k < kRelations; ++k) w[k] = w[k - 1] * alpha;
    return w;
}

WNumeric random_unimodular(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-199, 199);
    WNumeric w;
    for (int k = 0; k < kRelations; ++k) {
        const Rational a(num(rng), 100);
        w[k] = complex_roots_of_monic_quadratic(-a, Rational(1), kBits).first;
    }
    return w;
}

}  // namespace

TEST_CASE("all-ones weights give S[k] = n") {
    const QuadModulus mod = QuadModulus::unimodular(Rational(0));
    WExact ones{QuadExt(Rational(1), mod), QuadExt(Rational(1), mod), QuadExt(Rational(1), mod),
                QuadExt(Rational(1), mod), QuadExt(Rational(1), mod)};
    for (auto [q, m] : kGrid) {
        const SchemeParams p(q, m);
        const ConcreteTensor t = specialize(tensor(), p);
        const GramExact s = gram_coefficients(ones, t);
        for (int k = 0; k < kRelations; ++k) CHECK(s[k] == QuadExt(t.n, mod));
        CHECK_FALSE(is_hadamard(s, t.n));
    }
}

TEST_CASE("families I and II are Hadamard in exact arithmetic") {
    for (auto [q, m] : kGrid) {
        const SchemeParams p(q, m);
        const ConcreteTensor t = specialize(tensor(), p);
        for (Family f : {Family::I, Family::II}) {
            CAPTURE(q);
            CAPTURE(m);
            CAPTURE(to_string(f));
            const auto [i0, i1] = recovery_pair(f);
            const WRecovery rec = recover_w(family_avector(f, p), i0, i1);
            const GramExact s = gram_coefficients(rec.w, t);
            CHECK(is_hadamard(s, Rational(p.n())));
        }
    }
    const SchemeParams p(4, 2);
    const ConcreteTensor t = specialize(tensor(), p);
    const GramExact s = gram_coefficients(recover_w(family_avector(Family::I, p), 0, 2).w, t);
    CHECK(s[0].rational_value() == Rational(255));
    for (int k = 1; k < kRelations; ++k) CHECK(s[k].is_zero());
}

TEST_CASE("negating w2 breaks the Gram identity") {
    const SchemeParams p(4, 2);
    const ConcreteTensor t = specialize(tensor(), p);
    for (Family f : {Family::I, Family::II}) {
        const auto [i0, i1] = recovery_pair(f);
        WExact w = recover_w(family_avector(f, p), i0, i1).w;
        w[2] = -w[2];
        const GramExact s = gram_coefficients(w, t);
        CHECK_FALSE(is_hadamard(s, t.n));
        bool some = false;
        for (int k = 1; k < kRelations; ++k) some |= !s[k].is_zero();
        CHECK(some);

        WNumeric nw = numeric_w(f, p, 0, kBits).w;
        nw[2] = -nw[2];
        CHECK_FALSE(gram_verdict(gram_coefficients(nw, t), t.n, default_gram_tolerance(t.n)).passed);
    }
}

TEST_CASE("exact Gram coefficients need unimodular weights") {
    const QuadModulus mod = QuadModulus::unimodular(Rational(1));
    WExact w{QuadExt(Rational(1), mod), QuadExt(Rational(2), mod), QuadExt(Rational(1), mod),
             QuadExt(Rational(1), mod), QuadExt(Rational(1), mod)};
    CHECK_THROWS_AS(gram_coefficients(w, specialize(tensor(), SchemeParams(4, 2))), std::domain_error);
}

TEST_CASE("numeric Gram coefficients") {
    const SchemeParams p(4, 2);
    const ConcreteTensor t = specialize(tensor(), p);
    const BigFloat tol = default_gram_tolerance(t.n);

    SUBCASE("families I and II, both branches") {
        for (Family f : {Family::I, Family::II})
            for (int branch : {0, 1}) {
                const GramVerdict v = gram_verdict(gram_coefficients(numeric_w(f, p, branch, kBits).w, t), t.n, tol);
                CHECK(v.passed);
            }
    }
    SUBCASE("family VI with coupled signs") {
        for (int branch : {0, 1}) {
            const GramNumeric s = gram_coefficients(numeric_w(Family::VI, p, branch, kBits).w, t);
            const GramVerdict v = gram_verdict(s, t.n, tol);
            CHECK(v.passed);
            for (int k = 1; k < kRelations; ++k) CHECK(s[k].abs() <= pow2(-80, kBits) * BigFloat(255, kBits));
        }
    }
    SUBCASE("family VI with uncoupled signs is not Hadamard") {
        for (int sign : {1, -1}) {
            const GramVerdict v = gram_verdict(gram_coefficients(family_vi_weights(sign, -sign, kBits).w, t), t.n, tol);
            CHECK_FALSE(v.passed);
        }
    }
    SUBCASE("S[k] is real, and invariant under a unimodular scalar") {
        std::mt19937_64 rng(7);
        const BigComplex c = complex_roots_of_monic_quadratic(Rational(-3, 7), Rational(1), kBits).first;
        for (int trial = 0; trial < 20; ++trial) {
            const WNumeric w = random_unimodular(rng);
            WNumeric scaled = w;
            for (auto& x : scaled) x = x * c;
            const GramNumeric s = gram_coefficients(w, t), s2 = gram_coefficients(scaled, t);
            for (int k = 0; k < kRelations; ++k) {
                CHECK(abs(s[k].im) < tiny() * BigFloat(1 << 20, kBits));
                CHECK((s[k] - s2[k]).abs() < tiny() * BigFloat(1 << 20, kBits));
            }
        }
    }
}

TEST_CASE("dense_verify on Hamming schemes") {
    const BigFloat tol(Rational(1), kBits);
    const BigFloat tight = pow2(-100, kBits);  // below 1e-30

    SUBCASE("H(4,2) with w = (1, i, -1, -i, 1) is Hadamard") {
        const SchemeInstance h = hamming_instance(2);
        const WNumeric w = powers_of_root(Rational(0));
        for (Execution ex : {Execution::serial, Execution::parallel}) {
            const DenseReport r = dense_verify(h, w, tight, ex);
            CHECK(r.passed);
            CHECK(r.entries == 16 * 17 / 2);
        }
    }
    SUBCASE("H(4,3) with w_k = omega^k is Hadamard; negated w2 is not") {
        const SchemeInstance h = hamming_instance(3);
        WNumeric w = powers_of_root(Rational(-1));
        const DenseReport par = dense_verify(h, w, tight, Execution::parallel);
        const DenseReport ser = dense_verify(h, w, tight, Execution::serial);
        CHECK(par.passed);
        CHECK(ser.passed);
        CHECK(par.max_residual == ser.max_residual);
        CHECK(par.worst_x == ser.worst_x);
        CHECK(par.worst_y == ser.worst_y);

        w[2] = -w[2];
        const DenseReport bad = dense_verify(h, w, tight);
        CHECK_FALSE(bad.passed);
        CHECK(bad.worst_x >= 0);
        CHECK(h(bad.worst_x, bad.worst_y) != 0);
        CHECK(bad.max_residual > tol);
    }
    SUBCASE("all-ones weights: every Gram entry equals n") {
        const SchemeInstance h = hamming_instance(2);
        WNumeric w;
        for (auto& x : w) x = BigComplex::from_rational(1, kBits);
        const DenseReport r = dense_verify(h, w, tol);
        CHECK_FALSE(r.passed);
        CHECK(abs(r.max_residual - BigFloat(16, kBits)) < tiny());
        for (std::size_t x = 0; x < h.size(); ++x)
            for (std::size_t y = 0; y < h.size(); ++y) CHECK(abs(gram_entry(h, w, x, y).re - BigFloat(16, kBits)) < tiny());
    }
    SUBCASE("zero tolerance fails on rounding") {
        const SchemeInstance h = hamming_instance(3);
        const DenseReport r = dense_verify(h, powers_of_root(Rational(-1)), BigFloat(kBits));
        CHECK_FALSE(r.passed);
        CHECK(r.max_residual < tight);
    }
}

TEST_CASE("dense Gram entries match the intersection-number prediction") {
    const SchemeInstance h = hamming_instance(3);
    const ConcreteTensor t = tensor_from_instance(h);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> pick(0, h.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
        const WNumeric w = random_unimodular(rng);
        const GramNumeric s = gram_coefficients(w, t);
        for (int sample = 0; sample < 20; ++sample) {
            const std::size_t x = pick(rng), y = pick(rng);
            CHECK((gram_entry(h, w, x, y) - s[h(x, y)]).abs() < tiny());
        }
    }
}

TEST_CASE("serial and parallel dense reports agree on random weights") {
    const SchemeInstance h = hamming_instance(3);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 3; ++trial) {
        const WNumeric w = random_unimodular(rng);
        const BigFloat tol(Rational(1, 1000), kBits);
        const DenseReport a = dense_verify(h, w, tol, Execution::serial);
        const DenseReport b = dense_verify(h, w, tol, Execution::parallel);
        CHECK(a.passed == b.passed);
        CHECK(a.max_residual == b.max_residual);
        CHECK(a.worst_x == b.worst_x);
        CHECK(a.worst_y == b.worst_y);
    }
}
