#pragma once

#include "bmh/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bmh {

/// Polynomial indeterminate. Identifiers come from a fixed table whose order is
/// also the lexicographic monomial order (lower id = more significant):
///
///   0..9   X01 X02 X03 X04 X12 X13 X14 X23 X24 X34   (the ten a-vector slots)
///   10, 11 q r                                      (r stands for q^(m-1), so q*r = q^m)
///   12..   t w x y z u a b c Y                       (auxiliary)
class Var {
public:
    constexpr explicit Var(std::uint16_t id) : id_(id) {}

    constexpr std::uint16_t id() const { return id_; }
    std::string_view name() const;

    /// Throws std::invalid_argument for names not in the table.
    static Var from_name(std::string_view name);

    friend constexpr auto operator<=>(Var, Var) = default;

private:
    std::uint16_t id_;
};

namespace var {
/// X_{i,j} for 0 <= i < j <= 4 (order of arguments is irrelevant).
Var X(int i, int j);
/// Position of X_{i,j} in the a-vector (a01, a02, ..., a34).
int pair_index(int i, int j);
inline constexpr Var q{10};
inline constexpr Var r{11};
inline constexpr Var t{12};
inline constexpr Var w{13};
inline constexpr Var x{14};
inline constexpr Var y{15};
inline constexpr Var z{16};
inline constexpr Var u{17};
inline constexpr Var a{18};
inline constexpr Var b{19};
inline constexpr Var c{20};
inline constexpr Var Y{21};
inline constexpr std::uint16_t count = 22;
}  // namespace var

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept in descending lexicographic order of their exponent vectors,
/// so terms().begin() is the leading term. Zero coefficients are never stored
/// and variables that no longer occur are dropped, which makes structural
/// equality coincide with polynomial equality.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using TermMap = std::map<Exponents, Rational, std::greater<>>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    template <std::integral I>
    MultiPoly(I c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static MultiPoly variable(Var v);
    static MultiPoly monomial(const Rational& c, std::span<const std::pair<Var, unsigned>> powers);
    /// sum_k coeffs[k] * v^k
    static MultiPoly from_coefficients(Var v, std::span<const MultiPoly> coeffs);

    const std::vector<Var>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    bool contains(Var v) const;
    /// Value of a constant polynomial; throws std::logic_error otherwise.
    Rational constant_value() const;

    unsigned degree(Var v) const;
    unsigned total_degree() const;
    Rational leading_coefficient() const;

    /// Coefficients c_k (polynomials free of v) with p = sum_k c_k v^k.
    std::vector<MultiPoly> coefficients_in(Var v) const;
    MultiPoly derivative(Var v) const;

    /// Exact value at a point. Throws std::invalid_argument naming the first
    /// variable of p that the assignment does not cover.
    Rational evaluate(const std::map<Var, Rational>& assignment) const;
    /// Replaces the listed variables by polynomials; others are kept.
    MultiPoly substitute(const std::map<Var, MultiPoly>& images) const;

    MultiPoly pow(unsigned e) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    /// Human-readable form, e.g. "q^2*r^2 - 1/2*q + 3".
    std::string str() const;

private:
    friend std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den);

    MultiPoly(std::vector<Var> vars, TermMap terms);
    MultiPoly extended_to(const std::vector<Var>& vars) const;
    void normalize();

    std::vector<Var> vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Quotient num/den if den divides num exactly, std::nullopt otherwise.
/// Throws std::domain_error if den is zero.
std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den);

/// Positive rational c such that p / c has coprime integer coefficients, signed
/// so that p / c has a positive leading coefficient. content(0) = 1.
Rational content(const MultiPoly& p);
MultiPoly primitive_part(const MultiPoly& p);

/// Greatest common divisor over Q, normalized to integer coefficients with gcd 1
/// and a positive leading coefficient; gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Pseudo-remainder of a by b with respect to v.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v);

/// Evaluates p in an arbitrary commutative ring R that supports R + R, R * R and
/// R * Rational. value_of(v) supplies the image of each variable.
template <class R, class Lookup>
R evaluate_in(const MultiPoly& p, Lookup&& value_of, const R& zero) {
    const auto& vars = p.variables();
    std::vector<std::vector<R>> powers(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const unsigned deg = p.degree(vars[i]);
        powers[i].reserve(deg);
        R base = value_of(vars[i]);
        powers[i].push_back(base);
        for (unsigned d = 2; d <= deg; ++d) powers[i].push_back(powers[i].back() * base);
    }
    R acc = zero;
    for (const auto& [exps, coeff] : p.terms()) {
        std::optional<R> term;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            const R& f = powers[i][exps[i] - 1];
            term = term ? *term * f : f;
        }
        acc = term ? acc + *term * coeff : acc + (zero + coeff);
    }
    return acc;
}

}  // namespace bmh
