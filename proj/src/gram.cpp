#include "bmh/gram.hpp"

#include <stdexcept>

namespace bmh {

GramExact gram_coefficients(const WExact& w, const ConcreteTensor& t) {
    const QuadModulus& mod = w[0].modulus();
    std::vector<QuadExt> conj;
    for (int i = 0; i < kRelations; ++i) {
        if (!(w[i].norm() == Rational(1)))
            throw std::domain_error("gram_coefficients: w_" + std::to_string(i) + " = " + w[i].str() +
                                    " has norm " + w[i].norm().str() + ", so 1/w is not its conjugate");
        conj.push_back(w[i].inverse());
    }
    GramExact s{QuadExt(Rational(0), mod), QuadExt(Rational(0), mod), QuadExt(Rational(0), mod),
                QuadExt(Rational(0), mod), QuadExt(Rational(0), mod)};
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j) {
            const QuadExt prod = w[i] * conj[j];
            for (int k = 0; k < kRelations; ++k)
                if (!t.p[i][j][k].is_zero()) s[k] += prod * t.p[i][j][k];
        }
    return s;
}

GramNumeric gram_coefficients(const WNumeric& w, const ConcreteTensor& t) {
    const unsigned bits = w[0].precision();
    GramNumeric s{BigComplex(bits), BigComplex(bits), BigComplex(bits), BigComplex(bits), BigComplex(bits)};
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j) {
            const BigComplex prod = w[i] * w[j].conj();
            for (int k = 0; k < kRelations; ++k)
                if (!t.p[i][j][k].is_zero()) s[k] += prod * t.p[i][j][k];
        }
    return s;
}

bool is_hadamard(const GramExact& s, const Rational& n) {
    if (!(s[0].is_rational() && s[0].rational_value() == n)) return false;
    for (int k = 1; k < kRelations; ++k)
        if (!s[k].is_zero()) return false;
    return true;
}

GramVerdict gram_verdict(const GramNumeric& s, const Rational& n, const BigFloat& tol) {
    const unsigned bits = s[0].precision();
    GramVerdict v;
    v.worst_residual = BigFloat(bits);
    for (int k = 0; k < kRelations; ++k) {
        const BigFloat r = (k == 0 ? s[k] + (-n) : s[k]).abs();
        if (r > v.worst_residual) {
            v.worst_residual = r;
            v.worst_k = k;
        }
    }
    v.passed = v.worst_residual <= tol;
    return v;
}

BigFloat default_gram_tolerance(const Rational& n, unsigned bits) { return pow2(-80, bits) * BigFloat(n, bits); }

BigComplex gram_entry(const SchemeInstance& s, const WNumeric& w, std::size_t x, std::size_t y) {
    BigComplex acc(w[0].precision());
    for (std::size_t u = 0; u < s.size(); ++u) acc += w[s(x, u)] * w[s(y, u)].conj();
    return acc;
}

namespace {

struct RowWorst {
    BigFloat residual;
    long y = -1;
};

BigFloat residual_of(const BigComplex& g, bool diagonal, const BigFloat& n) {
    if (!diagonal) return g.abs();
    return hypot(g.re - n, g.im);
}

// Table of the 25 possible products w_i conj(w_j); each Gram entry is then a
// plain sum over u.
RowWorst scan_row(const SchemeInstance& s, const std::array<BigComplex, kRelations * kRelations>& table,
                  std::size_t x, const BigFloat& n, unsigned bits) {
    RowWorst worst{BigFloat(-1, bits), -1};
    BigComplex acc(bits);
    const std::size_t size = s.size();
    const std::uint8_t* rx = s.row(x);
    for (std::size_t y = x; y < size; ++y) {
        const std::uint8_t* ry = s.row(y);
        mpfr_set_zero(acc.re.raw(), 1);
        mpfr_set_zero(acc.im.raw(), 1);
        for (std::size_t u = 0; u < size; ++u) {
            const BigComplex& p = table[rx[u] * kRelations + ry[u]];
            acc.re += p.re;
            acc.im += p.im;
        }
        BigFloat r = residual_of(acc, x == y, n);
        if (r > worst.residual) {
            worst.residual = std::move(r);
            worst.y = static_cast<long>(y);
        }
    }
    return worst;
}

}  // namespace

DenseReport dense_verify(const SchemeInstance& s, const WNumeric& w, const BigFloat& tol, Execution execution) {
    const std::size_t size = s.size();
    const unsigned bits = w[0].precision();
    const BigFloat n(static_cast<long>(size), bits);
    DenseReport rep;
    rep.max_residual = BigFloat(-1, bits);

    if (execution == Execution::serial) {
        for (std::size_t x = 0; x < size; ++x)
            for (std::size_t y = x; y < size; ++y) {
                BigFloat r = residual_of(gram_entry(s, w, x, y), x == y, n);
                if (r > rep.max_residual) {
                    rep.max_residual = std::move(r);
                    rep.worst_x = static_cast<long>(x);
                    rep.worst_y = static_cast<long>(y);
                }
            }
    } else {
        std::array<BigComplex, kRelations * kRelations> table;
        for (int i = 0; i < kRelations; ++i)
            for (int j = 0; j < kRelations; ++j) table[i * kRelations + j] = w[i] * w[j].conj();
        std::vector<RowWorst> rows(size);
        const auto count = static_cast<std::ptrdiff_t>(size);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t x = 0; x < count; ++x) rows[x] = scan_row(s, table, static_cast<std::size_t>(x), n, bits);
        for (std::size_t x = 0; x < size; ++x)
            if (rows[x].residual > rep.max_residual) {
                rep.max_residual = rows[x].residual;
                rep.worst_x = static_cast<long>(x);
                rep.worst_y = rows[x].y;
            }
    }
    rep.entries = size * (size + 1) / 2;
    rep.passed = size > 0 && rep.max_residual <= tol;
    return rep;
}

}  // namespace bmh
