#include "bmh/univariate.hpp"

#include "bmh/linalg.hpp"

#include <stdexcept>

namespace bmh {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Rational eval_dense(const Dense& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Dense derivative(const Dense& p) {
    Dense d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    trim(d);
    return d;
}

Dense remainder(Dense a, const Dense& b) {
    const Rational& lb = b.back();
    while (a.size() >= b.size()) {
        const Rational f = a.back() / lb;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

// Scales by a positive rational so that the coefficients are coprime integers.
void make_primitive(Dense& p) {
    Rational g(0);
    for (const auto& c : p) g = rational_gcd(g, c);
    if (g.is_zero() || g.is_one()) return;
    const Rational inv = g.inverse();
    for (auto& c : p) c *= inv;
}

// Synthetic division by (x - root); assumes root is a root.
Dense deflate(const Dense& p, const Rational& root) {
    Dense q(p.size() - 1);
    Rational carry(0);
    for (std::size_t i = p.size() - 1; i > 0; --i) {
        carry = carry * root + p[i];
        q[i - 1] = carry;
    }
    return q;
}

int sign_at(const Dense& p, const std::optional<Rational>& x, bool minus_inf) {
    if (!x) {
        const int lead = p.back().sign();
        const bool odd = (p.size() - 1) % 2 == 1;
        return (minus_inf && odd) ? -lead : lead;
    }
    return eval_dense(p, *x).sign();
}

std::size_t variations(const std::vector<Dense>& seq, const std::optional<Rational>& x, bool minus_inf) {
    std::size_t v = 0;
    int last = 0;
    for (const auto& s : seq) {
        const int sg = sign_at(s, x, minus_inf);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

// Distinct roots in (lo, hi] given p(lo) != 0 (or lo = -inf).
std::size_t half_open_count(const std::vector<Dense>& seq, const std::optional<Rational>& lo,
                            const std::optional<Rational>& hi) {
    const std::size_t vl = variations(seq, lo, true);
    const std::size_t vh = variations(seq, hi, false);
    return vl - vh;
}

}  // namespace

std::vector<Rational> dense_coefficients(const MultiPoly& p) {
    if (p.variables().size() > 1) throw std::invalid_argument("expected a univariate polynomial, got " + p.str());
    if (p.is_constant()) return p.is_zero() ? Dense{} : Dense{p.constant_value()};
    Dense out(p.degree(p.variables().front()) + 1);
    for (const auto& [e, c] : p.terms()) out[e[0]] = c;
    return out;
}

std::vector<std::vector<Rational>> sturm_sequence(const std::vector<Rational>& p) {
    Dense s0 = p;
    trim(s0);
    if (s0.empty()) throw std::invalid_argument("sturm_sequence: zero polynomial");
    make_primitive(s0);
    std::vector<Dense> seq{s0};
    Dense s1 = derivative(s0);
    if (s1.empty()) return seq;
    make_primitive(s1);
    seq.push_back(s1);
    while (true) {
        Dense r = remainder(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        make_primitive(r);
        seq.push_back(std::move(r));
    }
    return seq;
}

SturmResult sturm_count(const MultiPoly& p, std::optional<Rational> lo, std::optional<Rational> hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    Dense coeffs = dense_coefficients(p);
    if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("sturm_count: empty interval");

    SturmResult result;
    result.lo = lo;
    result.hi = hi;
    result.shift = Rational(0);
    if (coeffs.size() == 1) return result;

    const auto seq = sturm_sequence(coeffs);
    result.sequence_length = seq.size();
    const bool lo_root = lo && eval_dense(coeffs, *lo).is_zero();
    const bool hi_root = hi && eval_dense(coeffs, *hi).is_zero();

    if (lo_root || hi_root) {
        Dense reduced = coeffs;
        if (lo_root)
            while (eval_dense(reduced, *lo).is_zero()) reduced = deflate(reduced, *lo);
        if (hi_root)
            while (eval_dense(reduced, *hi).is_zero()) reduced = deflate(reduced, *hi);
        const auto rseq = reduced.size() > 1 ? sturm_sequence(reduced) : std::vector<Dense>{};

        for (unsigned k = 1;; ++k) {
            const Rational eps = Rational(1) / Rational(2).pow(k);
            std::optional<Rational> nlo = lo, nhi = hi;
            if (lo_root) nlo = *lo + eps;
            if (hi_root) nhi = *hi - eps;
            if (nlo && nhi && !(*nlo < *nhi)) continue;
            if (nlo && eval_dense(coeffs, *nlo).is_zero()) continue;
            if (nhi && eval_dense(coeffs, *nhi).is_zero()) continue;
            if (!rseq.empty()) {
                if (lo_root && half_open_count(rseq, lo, nlo) != 0) continue;
                if (hi_root && half_open_count(rseq, nhi, hi) != 0) continue;
            }
            result.lo = nlo;
            result.hi = nhi;
            result.shift = eps;
            break;
        }
    }
    result.count = half_open_count(seq, result.lo, result.hi);
    return result;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    const unsigned m = f.degree(v), n = g.degree(v);
    if (m == 0 && n == 0) throw std::invalid_argument("resultant: both polynomials are constant in the elimination variable");
    const auto fc = f.coefficients_in(v);
    const auto gc = g.coefficients_in(v);
    const std::size_t size = m + n;
    Matrix<MultiPoly> syl(size, size, MultiPoly());
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k) syl(row, row + k) = fc[m - k];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k) syl(n + row, row + k) = gc[n - k];
    return bareiss_determinant(std::move(syl));
}

std::size_t exact_rank(Matrix<Rational> m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, rank);
        const Rational inv = m(rank, col).inverse();
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            const Rational f = m(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace bmh
