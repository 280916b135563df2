#include "bmh/hadamard.hpp"

#include "bmh/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace bmh {

namespace {

MultiPoly X(int i, int j) { return MultiPoly::variable(var::X(i, j)); }

void require_distinct(std::initializer_list<int> idx, const char* what) {
    std::set<int> seen;
    for (int i : idx) {
        if (i < 0 || i >= kRelations) throw std::invalid_argument(std::string(what) + ": index out of range");
        if (!seen.insert(i).second) throw std::invalid_argument(std::string(what) + ": repeated index");
    }
}

RatFunc expr(const char* s) { return parse_expression(s, scheme_aliases()); }

const char* const kA01 = "2*(qm^2*r^2-(q+2)*qm*r+2)/(qm*r*(qm*r+q-2))";
const char* const kA02 = "-2*(qm^2-q^2+2*q-2)/(q*(qm*r+q-2))";
const char* const kA12 = "-2*(qm^2-2)/qm^2";

BigComplex real(const BigFloat& v) { return {v, BigFloat(v.precision())}; }

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::I: return "I";
        case Family::II: return "II";
        case Family::VI: return "VI";
    }
    return "?";
}

Family parse_family(std::string_view s) {
    std::string u(s);
    std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (u == "I" || u == "1") return Family::I;
    if (u == "II" || u == "2") return Family::II;
    if (u == "VI" || u == "6") return Family::VI;
    throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected I, II or VI)");
}

MultiPoly g_poly(int i, int j, int k) {
    require_distinct({i, j, k}, "g_poly");
    const MultiPoly a = X(i, j), b = X(i, k), c = X(j, k);
    return a * a + b * b + c * c - a * b * c - Rational(4);
}

MultiPoly h_poly(int i, int j, int k, int l) {
    require_distinct({i, j, k, l}, "h_poly");
    Matrix<MultiPoly> m(3, 3);
    const MultiPoly rows[3][3] = {{2, X(i, j), X(i, k)}, {X(i, j), 2, X(j, k)}, {X(i, l), X(j, l), X(k, l)}};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) m(a, b) = rows[a][b];
    return bareiss_determinant(std::move(m));
}

MultiPoly h_expanded(int i, int j, int k, int l) {
    require_distinct({i, j, k, l}, "h_expanded");
    return (X(k, l).pow(2) - Rational(4)) * X(i, j) - X(k, l) * (X(k, i) * X(l, j) + X(k, j) * X(l, i)) +
           Rational(2) * (X(k, i) * X(k, j) + X(l, i) * X(l, j));
}

MultiPoly e_poly(int k, const EigenData& e) {
    if (k < 1 || k >= kRelations) throw std::invalid_argument("e_poly: k must be in 1..4");
    RatFunc sum = -e.n;
    for (int i = 0; i < kRelations; ++i) {
        sum += e.P(k, i) * e.P(k, i);
        for (int j = i + 1; j < kRelations; ++j) sum += e.P(k, i) * e.P(k, j) * RatFunc(X(i, j));
    }
    // entries of P have denominator at most 2
    return (sum * Rational(4)).as_polynomial();
}

std::vector<Generator> full_generator_set(const EigenData& e, bool keep_duplicates) {
    std::vector<Generator> out;
    for (int i = 0; i < kRelations; ++i)
        for (int j = i + 1; j < kRelations; ++j)
            for (int k = j + 1; k < kRelations; ++k)
                out.push_back({"g(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")",
                               g_poly(i, j, k)});

    // Every permutation s of {0..4} contributes h(s(0), s(1), s(2), s(3)). The
    // polynomial is symmetric in its first two and in its last two arguments.
    std::array<int, kRelations> perm{0, 1, 2, 3, 4};
    std::set<std::array<int, 4>> seen;
    do {
        std::array<int, 4> key{perm[0], perm[1], perm[2], perm[3]};
        if (!keep_duplicates) {
            if (key[0] > key[1]) std::swap(key[0], key[1]);
            if (key[2] > key[3]) std::swap(key[2], key[3]);
            if (!seen.insert(key).second) continue;
        }
        std::string name = "h(";
        for (int t = 0; t < 4; ++t) name += std::to_string(key[t]) + (t < 3 ? "," : ")");
        out.push_back({std::move(name), h_expanded(key[0], key[1], key[2], key[3])});
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (int k = 1; k < kRelations; ++k) out.push_back({"e(" + std::to_string(k) + ")", e_poly(k, e)});
    return out;
}

AVector<RatFunc> family_avector(Family f) {
    AVector<RatFunc> v;
    v.a.fill(RatFunc(2));
    switch (f) {
        case Family::I: {
            // w = (1, 1, w2, 1, 1) with w2 + 1/w2 = a12 of family II's formula
            const RatFunc x02 = expr(kA12);
            for (int i = 0; i < kRelations; ++i)
                if (i != 2) v(i, 2) = x02;
            return v;
        }
        case Family::II: {
            const RatFunc a01 = expr(kA01), a02 = expr(kA02), a12 = expr(kA12);
            for (auto [i, j] : {std::pair{0, 1}, {1, 3}, {1, 4}}) v(i, j) = a01;
            for (auto [i, j] : {std::pair{0, 2}, {2, 3}, {2, 4}}) v(i, j) = a02;
            v(1, 2) = a12;
            return v;
        }
        case Family::VI: break;
    }
    throw std::invalid_argument("family VI has no closed-form a-vector; use the numeric weights");
}

AVector<Rational> family_avector(Family f, const SchemeParams& params) {
    const AVector<RatFunc> sym = family_avector(f);
    const auto at = params.assignment();
    AVector<Rational> v;
    for (std::size_t i = 0; i < v.a.size(); ++i) v.a[i] = sym.a[i].evaluate(at);
    return v;
}

CommonZeroReport verify_common_zero(const AVector<RatFunc>& a, const std::vector<Generator>& gens) {
    const RatFunc q = RatFunc::variable(var::q), r = RatFunc::variable(var::r);
    auto lookup = [&](Var v) -> RatFunc {
        if (v.id() < 10) return a.a[v.id()];
        if (v == var::q) return q;
        if (v == var::r) return r;
        throw std::invalid_argument("verify_common_zero: unexpected variable " + std::string(v.name()));
    };
    CommonZeroReport rep;
    rep.generators = gens.size();
    for (const auto& g : gens) {
        const RatFunc val = evaluate_in<RatFunc>(g.poly, lookup, RatFunc(0));
        if (!val.is_zero()) rep.nonzero.push_back({g.name, val.str()});
    }
    return rep;
}

CommonZeroReport verify_common_zero(const AVector<Rational>& a, const SchemeParams& params,
                                    const std::vector<Generator>& gens) {
    std::map<Var, Rational> at = params.assignment();
    for (int i = 0; i < kRelations; ++i)
        for (int j = i + 1; j < kRelations; ++j) at[var::X(i, j)] = a(i, j);
    CommonZeroReport rep;
    rep.generators = gens.size();
    for (const auto& g : gens) {
        const Rational val = g.poly.evaluate(at);
        if (!val.is_zero()) rep.nonzero.push_back({g.name, val.str()});
    }
    return rep;
}

std::vector<std::string> avector_range_violations(const AVector<Rational>& a) {
    std::vector<std::string> out;
    bool inside = false;
    for (int i = 0; i < kRelations; ++i)
        for (int j = i + 1; j < kRelations; ++j) {
            const Rational& v = a(i, j);
            if (v < Rational(-2) || v > Rational(2))
                out.push_back("a" + std::to_string(i) + std::to_string(j) + " = " + v.str() + " outside [-2, 2]");
            inside |= Rational(-2) < v && v < Rational(2);
        }
    if (!inside) out.push_back("no entry strictly inside (-2, 2)");
    return out;
}

std::pair<int, int> recovery_pair(Family f) {
    switch (f) {
        case Family::I: return {0, 2};
        case Family::II: return {0, 1};
        case Family::VI: break;
    }
    throw std::invalid_argument("recovery_pair: family VI is numeric only");
}

WRecovery recover_w(const AVector<Rational>& a, int i0, int i1) {
    require_distinct({i0, i1}, "recover_w");
    const Rational& base = a(i0, i1);
    if (base == Rational(2) || base == Rational(-2))
        throw std::invalid_argument("recover_w: a_" + std::to_string(i0) + std::to_string(i1) + " = " + base.str() +
                                    " (must differ from +-2)");
    const QuadModulus mod = QuadModulus::unimodular(base);
    std::vector<QuadExt> w(kRelations, QuadExt(Rational(0), mod));
    w[i0] = QuadExt(Rational(1), mod);
    w[i1] = QuadExt::generator(mod);
    const QuadExt num = w[i1] * w[i1] - w[i0] * w[i0];
    for (int i = 0; i < kRelations; ++i) {
        if (i == i0 || i == i1) continue;
        const QuadExt den = w[i1] * a(i1, i) - w[i0] * a(i0, i);
        if (den.is_zero())
            throw std::domain_error("recover_w: vanishing denominator for w_" + std::to_string(i) + " from (" +
                                    std::to_string(i0) + "," + std::to_string(i1) + ")");
        w[i] = num / den;
    }
    if (i0 != 0) {
        const QuadExt inv0 = w[0].inverse();
        for (auto& wi : w) wi = wi * inv0;
    }
    WRecovery out{{w[0], w[1], w[2], w[3], w[4]}, {}};
    for (int i = 0; i < kRelations; ++i)
        for (int j = i + 1; j < kRelations; ++j) {
            const QuadExt lhs = w[i] / w[j] + w[j] / w[i];
            if (!(lhs == QuadExt(a(i, j), mod))) out.inconsistent.emplace_back(i, j);
        }
    return out;
}

WNumeric embed(const WExact& w, int branch, unsigned bits) {
    return {w[0].embed(branch, bits), w[1].embed(branch, bits), w[2].embed(branch, bits), w[3].embed(branch, bits),
            w[4].embed(branch, bits)};
}

namespace {

NumericW finish(std::vector<BigComplex> w, unsigned bits) {
    const BigFloat one(1, bits);
    NumericW out{{w[0], w[1], w[2], w[3], w[4]}, BigFloat(bits)};
    for (const auto& wi : w) {
        const BigFloat d = abs(wi.abs() - one);
        if (d > out.modulus_defect) out.modulus_defect = d;
    }
    return out;
}

}  // namespace

NumericW family_vi_weights(int sign_w, int sign_a13, unsigned bits) {
    if ((sign_w != 1 && sign_w != -1) || (sign_a13 != 1 && sign_a13 != -1))
        throw std::invalid_argument("family_vi_weights: signs must be +1 or -1");
    const BigFloat one(1, bits);
    const BigFloat sw(sign_w, bits), s13(sign_a13, bits);
    const BigFloat s = sqrt(BigFloat(104899, bits));
    const BigFloat t = sqrt((BigFloat(8, bits) * s - BigFloat(2591, bits)) / BigFloat(3, bits));
    const BigFloat c85t = BigFloat(85, bits) * t * sw;
    const BigFloat lin = (BigFloat(21, bits) * s - BigFloat(7140, bits) + c85t) / BigFloat(176, bits);
    const BigFloat a02 = (BigFloat(43, bits) * s - BigFloat(14620, bits) + c85t) / BigFloat(352, bits);
    // the a13 display carries the opposite sign symbol
    const BigFloat a13 =
        (BigFloat(21, bits) * s - BigFloat(1848, bits) - s13 * (BigFloat(4, bits) * s + BigFloat(1253, bits)) * t) /
        BigFloat(2640, bits);
    const BigComplex w1 = complex_roots_of_monic_quadratic(lin, one).first;
    const BigComplex w1sq_m1 = w1 * w1 - real(one);
    std::vector<BigComplex> w(kRelations, real(one));
    w[1] = w1;
    w[2] = real(BigFloat(-64, bits)) * w1sq_m1 / (w1 * Rational(127) + real(BigFloat(64, bits) * a02));
    w[3] = w1sq_m1 * Rational(90) /
           (w1 * real(BigFloat(90, bits) * a13) + real(BigFloat(1117, bits) - BigFloat(4, bits) * s));
    return finish(std::move(w), bits);
}

NumericW numeric_w(Family f, const SchemeParams& params, int branch, unsigned bits) {
    if (branch != 0 && branch != 1) throw std::invalid_argument("numeric_w: branch must be 0 or 1");
    if (bits < kMinPrecisionBits)
        throw std::invalid_argument("numeric_w: precision below " + std::to_string(kMinPrecisionBits) + " bits");
    if (f == Family::VI) {
        if (params.q != 4 || params.m != 2)
            throw std::invalid_argument("family VI is only available at (q, m) = (4, 2), the one parameter pair with a "
                                        "closed form for its weights");
        const int sigma = branch == 0 ? 1 : -1;
        return family_vi_weights(sigma, sigma, bits);
    }

    const AVector<Rational> a = family_avector(f, params);
    const auto [i0, i1] = recovery_pair(f);
    const auto roots = complex_roots_of_monic_quadratic(-a(i0, i1), Rational(1), bits);
    std::vector<BigComplex> w(kRelations, BigComplex(bits));
    w[i0] = real(BigFloat(1, bits));
    w[i1] = branch == 0 ? roots.first : roots.second;
    const BigComplex num = w[i1] * w[i1] - w[i0] * w[i0];
    for (int i = 0; i < kRelations; ++i) {
        if (i == i0 || i == i1) continue;
        w[i] = num / (w[i1] * a(i1, i) - w[i0] * a(i0, i));
    }
    if (i0 != 0) {
        const BigComplex inv0 = w[0].inverse();
        for (auto& wi : w) wi = wi * inv0;
    }
    return finish(std::move(w), bits);
}

}  // namespace bmh
