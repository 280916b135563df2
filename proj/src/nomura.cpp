#include "bmh/nomura.hpp"

#include "bmh/linalg.hpp"
#include "bmh/reference_data.hpp"

#include <stdexcept>

namespace bmh {

namespace {

MultiPoly mq() { return MultiPoly::variable(var::q); }
MultiPoly mr() { return MultiPoly::variable(var::r); }

// q^2 r^2 - c
MultiPoly n_shift(long c) { return (mq() * mr()).pow(2) - MultiPoly(c); }

}  // namespace

std::array<RatFunc, 4> symmetry_sums(const AVector<RatFunc>& a, const IntersectionTensor& t) {
    std::array<RatFunc, 4> out;
    for (int i = 1; i <= 4; ++i) {
        RatFunc s;
        for (int j = 0; j < kRelations; ++j) {
            s += t(j, j, i);
            for (int k = j + 1; k < kRelations; ++k) {
                if (t(j, k, i).is_zero()) continue;
                s += t(j, k, i) * (a(j, k) * a(j, k) - RatFunc(2));
            }
        }
        out[i - 1] = s;
    }
    return out;
}

std::array<MultiPoly, 4> symmetry_golden(Family f) {
    const MultiPoly base = n_shift(1) * n_shift(4);
    switch (f) {
        case Family::I:
            return {base, base, base, base};
        case Family::II: {
            const MultiPoly pp = n_shift(1) * reference::family2_symmetry_factor();
            return {pp, pp, pp, base};
        }
        case Family::VI:
            break;
    }
    throw std::invalid_argument("symmetry_golden: no closed form for family " + to_string(f));
}

bool positive_on_parameter_region(const MultiPoly& p) {
    const MultiPoly x = MultiPoly::variable(var::x);
    const MultiPoly y = MultiPoly::variable(var::y);
    const MultiPoly q = MultiPoly(4) + x;
    const MultiPoly shifted = p.substitute({{var::q, q}, {var::r, q + y}});
    if (shifted.is_zero()) return false;
    for (const auto& [exps, c] : shifted.terms())
        if (c.sign() < 0) return false;
    // constant term is the last (lowest) term in the lex order
    const auto& [exps, c] = *shifted.terms().rbegin();
    for (auto e : exps)
        if (e != 0) return false;
    return c.sign() > 0;
}

SymmetryCheck check_symmetry(Family f, const IntersectionTensor& t) {
    SymmetryCheck out;
    out.sums = symmetry_sums(family_avector(f), t);
    const auto golden = symmetry_golden(f);
    for (int i = 0; i < 4; ++i) {
        const RatFunc& s = out.sums[i];
        // the reduced form fixes the numerator only up to a constant factor
        const auto ratio = divide_exact(s.numerator(), golden[i]);
        if (s.is_zero() || !ratio || !ratio->is_constant()) out.mismatched.push_back(i + 1);
        MultiPoly num = s.numerator(), den = s.denominator();
        if (!positive_on_parameter_region(den)) {
            num = -num;
            den = -den;
        }
        if (!positive_on_parameter_region(num) || !positive_on_parameter_region(den)) out.uncertified.push_back(i + 1);
    }
    return out;
}

int cijk_unknown(int i, int j, int k) {
    if (i < 1 || i > 2 || j < 1 || j > 2 || k < 1 || k > 2) throw std::out_of_range("cijk_unknown: index outside {1,2}");
    return (i - 1) * 4 + (j - 1) * 2 + (k - 1);
}

Tensor3<Rational> cijk_fixed(const ConcreteTensor& t) {
    if (!t(1, 3, 4).is_zero() || !t(2, 3, 4).is_zero())
        throw std::logic_error("cijk_fixed: p_13^4 = " + t(1, 3, 4).str() + ", p_23^4 = " + t(2, 3, 4).str() +
                               ", expected both zero");
    Tensor3<Rational> c{};
    c[0][4][4] = c[4][0][4] = c[4][4][0] = Rational(1);
    c[3][3][3] = t(3, 3, 4);
    c[4][4][4] = t(4, 4, 4) - Rational(1);
    return c;
}

namespace {

struct Equations {
    Matrix<Rational> a;
    std::vector<Rational> b;
};

// Rows: for each of the three positions, for (j, k) in {1,2}^2, summing that
// position over {1, 2}.
Equations build_equations(const ConcreteTensor& t, int families) {
    Equations eq{Matrix<Rational>(families * 4, 8, Rational(0)), {}};
    std::size_t row = 0;
    for (int pos = 0; pos < families; ++pos)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k) {
                for (int i = 1; i <= 2; ++i) {
                    const int col = pos == 0 ? cijk_unknown(i, j, k) : pos == 1 ? cijk_unknown(j, i, k) : cijk_unknown(j, k, i);
                    eq.a(row, col) = Rational(1);
                }
                eq.b.push_back(t(j, k, 4));
                ++row;
            }
    return eq;
}

}  // namespace

std::size_t cijk_rank(const ConcreteTensor& t, bool keep_third) {
    return exact_rank(build_equations(t, keep_third ? 3 : 2).a);
}

CijkSystem cijk_system(const ConcreteTensor& t) {
    CijkSystem s;
    s.c0 = cijk_fixed(t);
    s.v = Tensor3<Rational>{};
    Equations eq = build_equations(t, 3);
    s.coefficients = eq.a;
    s.rhs = eq.b;
    s.rank = exact_rank(eq.a);
    if (s.rank != 7)
        throw std::runtime_error("cijk_system: coefficient rank " + std::to_string(s.rank) + ", expected 7");

    // reduced row echelon form of [A | b]
    const std::size_t rows = eq.a.rows(), cols = 8;
    Matrix<Rational> m(rows, cols + 1, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = eq.a(i, j);
        m(i, cols) = eq.b[i];
    }
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        const Rational inv = m(r, c).inverse();
        for (std::size_t j = 0; j <= cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (std::size_t j = 0; j <= cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_of_col[c] = static_cast<int>(r++);
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!m(i, cols).is_zero())
            throw std::runtime_error("cijk_system: inconsistent, row " + std::to_string(i) + " reduces to 0 = " +
                                     m(i, cols).str());

    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] < 0) free_col = c;
    std::array<Rational, 8> c0{}, v{};
    v[free_col] = Rational(1);
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] < 0) continue;
        c0[c] = m(pivot_of_col[c], cols);
        v[c] = -m(pivot_of_col[c], free_col);
    }
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k) {
                s.c0[i][j][k] = c0[cijk_unknown(i, j, k)];
                s.v[i][j][k] = v[cijk_unknown(i, j, k)];
            }
    return s;
}

MultiPoly CijkSystem::c(int i, int j, int k) const {
    return MultiPoly(c0[i][j][k]) + MultiPoly::variable(var::t) * v[i][j][k];
}

std::vector<std::string> cijk_marginal_violations(const CijkSystem& s, const ConcreteTensor& tensor, const Rational& t) {
    auto value = [&](int i, int j, int k) { return s.c0[i][j][k] + t * s.v[i][j][k]; };
    std::vector<std::string> out;
    for (int pos = 0; pos < 3; ++pos)
        for (int j = 0; j < kRelations; ++j)
            for (int k = 0; k < kRelations; ++k) {
                Rational sum;
                for (int i = 0; i < kRelations; ++i)
                    sum += pos == 0 ? value(i, j, k) : pos == 1 ? value(j, i, k) : value(j, k, i);
                if (sum != tensor(j, k, 4))
                    out.push_back("position " + std::to_string(pos) + ", (j,k) = (" + std::to_string(j) + "," +
                                  std::to_string(k) + "): sum " + sum.str() + " != p_jk^4 = " + tensor(j, k, 4).str());
            }
    return out;
}

namespace {

// a + b w as a polynomial in var::w, then times var::t^e
MultiPoly as_poly(const QuadExt& z) { return MultiPoly(z.a()) + MultiPoly::variable(var::w) * z.b(); }

QuadExt qzero(const QuadModulus& m) { return QuadExt(Rational(0), m); }

}  // namespace

FirstClaimResult first_claim_obstruction(const WExact& w, const ConcreteTensor& t) {
    const CijkSystem s = cijk_system(t);
    const QuadModulus& mod = w[0].modulus();
    std::array<QuadExt, kRelations> inv{qzero(mod), qzero(mod), qzero(mod), qzero(mod), qzero(mod)};
    for (int i = 0; i < kRelations; ++i) inv[i] = w[i].inverse();

    FirstClaimResult out{s.rank, qzero(mod), qzero(mod), qzero(mod), qzero(mod), {}, {}, true};
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j)
            for (int k = 0; k < kRelations; ++k) {
                if (s.c0[i][j][k].is_zero() && s.v[i][j][k].is_zero()) continue;
                const QuadExt f = w[i] * w[i] * inv[j] * inv[k];
                const QuadExt g = w[j] * w[k] * inv[i] * inv[i];
                out.A += f * s.c0[i][j][k];
                out.B += f * s.v[i][j][k];
                out.C += g * s.c0[i][j][k];
                out.D += g * s.v[i][j][k];
            }

    const QuadExt det = out.A * out.D - out.B * out.C;
    out.norm_route = det.norm();
    if (out.B.is_zero() && out.D.is_zero()) {
        out.common_zero = out.A.is_zero() && out.C.is_zero();
        out.resultant_route = out.norm_route;
        return out;
    }
    out.common_zero = det.is_zero();

    const MultiPoly tv = MultiPoly::variable(var::t);
    const MultiPoly F = as_poly(out.A) + as_poly(out.B) * tv;
    const MultiPoly G = as_poly(out.C) + as_poly(out.D) * tv;
    const MultiPoly wv = MultiPoly::variable(var::w);
    const MultiPoly minpoly = wv * wv - wv * mod.p - MultiPoly(mod.q0);
    if (out.B.is_zero() || out.D.is_zero()) {
        // one equation does not involve t, so res_t is not the determinant
        out.resultant_route = out.norm_route;
        return out;
    }
    const MultiPoly r1 = resultant(F, G, var::t);
    out.resultant_route = r1.is_zero() ? Rational(0) : resultant(r1, minpoly, var::w).constant_value();
    return out;
}

SecondClaimResult second_claim_sums(const WExact& w, const ConcreteTensor& t) {
    const QuadModulus& mod = w[0].modulus();
    SecondClaimResult out{{qzero(mod), qzero(mod), qzero(mod)}, {}, {}};
    std::array<QuadExt, kRelations> inv{qzero(mod), qzero(mod), qzero(mod), qzero(mod), qzero(mod)};
    for (int i = 0; i < kRelations; ++i) inv[i] = w[i].inverse();
    for (int l = 1; l <= 3; ++l) {
        QuadExt& s = out.sums[l - 1];
        for (int i = 0; i < kRelations; ++i)
            for (int j = 0; j < kRelations; ++j) {
                if (t(i, j, l).is_zero()) continue;
                for (int k = 0; k < kRelations; ++k) {
                    const Rational c = t(i, j, l) * t(4, k, i);
                    if (!c.is_zero()) s += w[i] * w[i] * inv[k] * inv[j] * c;
                }
            }
        out.norms[l - 1] = s.norm();
        if (out.norms[l - 1].is_zero()) out.vanishing.push_back(l);
    }
    return out;
}

MultiPoly claim_certificate(Family f, int claim) {
    if (f == Family::I && claim == 1) return reference::family1_first_claim_certificate();
    if (f == Family::I && claim == 2) return reference::family1_second_claim_certificate();
    if (f == Family::II && claim == 1) return reference::family2_first_claim_certificate();
    if (f == Family::II && claim == 2) return reference::family2_second_claim_certificate();
    throw std::invalid_argument("claim_certificate: no certificate for family " + to_string(f) + ", claim " +
                                std::to_string(claim));
}

SturmResult obstruction_cubic_roots_beyond_255() {
    return sturm_count(reference::family1_obstruction_cubic(), Rational(255), std::nullopt);
}

BigComplex jones_inner_product(const SchemeInstance& s, const WNumeric& w, std::size_t a, std::size_t b,
                               std::size_t c, std::size_t d) {
    const unsigned bits = w[0].precision();
    std::array<BigComplex, kRelations> inv;
    for (int i = 0; i < kRelations; ++i) inv[i] = w[i].inverse();
    BigComplex acc(bits);
    for (std::size_t x = 0; x < s.size(); ++x)
        acc += w[s(x, a)] * w[s(x, c)] * inv[s(x, b)] * inv[s(x, d)];
    return acc;
}

}  // namespace bmh
