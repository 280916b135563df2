#include "bmh/multipoly.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace bmh {

namespace {

constexpr std::array<std::string_view, var::count> kVarNames = {
    "X01", "X02", "X03", "X04", "X12", "X13", "X14", "X23", "X24", "X34",
    "q",   "r",   "t",   "w",   "x",   "y",   "z",   "u",   "a",   "b",
    "c",   "Y"};

std::vector<Var> merge_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
    std::vector<Var> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void add_term(MultiPoly::TermMap& terms, const MultiPoly::Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

}  // namespace

std::string_view Var::name() const {
    return id_ < kVarNames.size() ? kVarNames[id_] : std::string_view("?");
}

Var Var::from_name(std::string_view name) {
    for (std::uint16_t i = 0; i < kVarNames.size(); ++i)
        if (kVarNames[i] == name) return Var(i);
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

int var::pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j > 4 || i == j) throw std::invalid_argument("pair_index: need distinct indices in 0..4");
    static constexpr int offset[4] = {0, 4, 7, 9};
    return offset[i] + (j - i - 1);
}

Var var::X(int i, int j) { return Var(static_cast<std::uint16_t>(pair_index(i, j))); }

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(std::vector<Var> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
    normalize();
}

MultiPoly MultiPoly::variable(Var v) {
    TermMap t;
    t.emplace(Exponents{1}, Rational(1));
    return MultiPoly({v}, std::move(t));
}

MultiPoly MultiPoly::monomial(const Rational& c, std::span<const std::pair<Var, unsigned>> powers) {
    std::vector<Var> vars;
    for (const auto& [v, e] : powers) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    Exponents exps(vars.size(), 0);
    for (const auto& [v, e] : powers) {
        auto pos = std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
        exps[pos] += e;
    }
    TermMap t;
    if (!c.is_zero()) t.emplace(std::move(exps), c);
    return MultiPoly(std::move(vars), std::move(t));
}

MultiPoly MultiPoly::from_coefficients(Var v, std::span<const MultiPoly> coeffs) {
    MultiPoly out;
    MultiPoly vp(1);
    const MultiPoly x = variable(v);
    for (const auto& c : coeffs) {
        if (c.contains(v)) throw std::invalid_argument("from_coefficients: coefficient depends on the main variable");
        out += c * vp;
        vp *= x;
    }
    return out;
}

void MultiPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;

    std::vector<Var> vars;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) vars.push_back(vars_[i]);
    TermMap terms;
    for (auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(vars.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        terms.emplace(std::move(ne), std::move(c));
    }
    vars_ = std::move(vars);
    terms_ = std::move(terms);
}

MultiPoly MultiPoly::extended_to(const std::vector<Var>& vars) const {
    if (vars == vars_) return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i)
        pos[i] = std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin();
    MultiPoly out;
    out.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

bool MultiPoly::contains(Var v) const { return std::binary_search(vars_.begin(), vars_.end(), v); }

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value: polynomial is not constant: " + str());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned MultiPoly::degree(Var v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return 0;
    const auto idx = it - vars_.begin();
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

Rational MultiPoly::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return {*this};
    const auto idx = static_cast<std::size_t>(it - vars_.begin());
    std::vector<Var> rest(vars_);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    std::vector<TermMap> parts(degree(v) + 1);
    for (const auto& [e, c] : terms_) {
        Exponents ne(e);
        ne.erase(ne.begin() + static_cast<std::ptrdiff_t>(idx));
        parts[e[idx]].emplace(std::move(ne), c);
    }
    std::vector<MultiPoly> out;
    out.reserve(parts.size());
    for (auto& t : parts) out.push_back(MultiPoly(rest, std::move(t)));
    return out;
}

MultiPoly MultiPoly::derivative(Var v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return {};
    const auto idx = it - vars_.begin();
    TermMap t;
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        Exponents ne(e);
        --ne[idx];
        add_term(t, ne, c * Rational(e[idx]));
    }
    return MultiPoly(vars_, std::move(t));
}

Rational MultiPoly::evaluate(const std::map<Var, Rational>& assignment) const {
    for (Var v : vars_)
        if (!assignment.contains(v))
            throw std::invalid_argument("evaluate: no value for variable " + std::string(v.name()));
    return evaluate_in<Rational>(*this, [&](Var v) { return assignment.at(v); }, Rational(0));
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly>& images) const {
    return evaluate_in<MultiPoly>(
        *this,
        [&](Var v) {
            auto it = images.find(v);
            return it != images.end() ? it->second : variable(v);
        },
        MultiPoly());
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(1), base(*this);
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.is_zero()) return *this;
    if (vars_ == o.vars_) {
        for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
        normalize();
        return *this;
    }
    const auto vars = merge_vars(vars_, o.vars_);
    *this = extended_to(vars);
    const MultiPoly oe = o.extended_to(vars);
    for (const auto& [e, c] : oe.terms_) add_term(terms_, e, c);
    normalize();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        *this = MultiPoly();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_constant()) return a * b.constant_value();
    if (a.is_constant()) return b * a.constant_value();
    const auto vars = merge_vars(a.vars_, b.vars_);
    const MultiPoly ae = a.extended_to(vars);
    const MultiPoly be = b.extended_to(vars);
    MultiPoly::TermMap t;
    MultiPoly::Exponents e(vars.size());
    for (const auto& [ea, ca] : ae.terms_) {
        for (const auto& [eb, cb] : be.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(t, e, ca * cb);
        }
    }
    return MultiPoly(vars, std::move(t));
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool any_var = false;
        for (auto x : e) any_var |= x != 0;
        bool wrote = false;
        if (!mag.is_one() || !any_var) {
            os << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << vars_[i].name();
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
    if (num.is_zero()) return MultiPoly();
    if (den.is_constant()) return num * den.constant_value().inverse();
    for (Var v : den.vars_)
        if (!num.contains(v)) return std::nullopt;

    const auto& vars = num.vars_;
    const MultiPoly d = den.extended_to(vars);
    MultiPoly::TermMap rem = num.terms_;
    MultiPoly::TermMap quot;
    const auto& [lead_e, lead_c] = *d.terms_.begin();
    MultiPoly::Exponents qe(vars.size()), te(vars.size());
    while (!rem.empty()) {
        const auto& [re, rc] = *rem.begin();
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (re[i] < lead_e[i]) return std::nullopt;
            qe[i] = re[i] - lead_e[i];
        }
        const Rational qc = rc / lead_c;
        quot.emplace(qe, qc);
        for (const auto& [de, dc] : d.terms_) {
            for (std::size_t i = 0; i < vars.size(); ++i) te[i] = qe[i] + de[i];
            add_term(rem, te, -(qc * dc));
        }
    }
    return MultiPoly(vars, std::move(quot));
}

Rational content(const MultiPoly& p) {
    if (p.is_zero()) return Rational(1);
    Rational g(0);
    for (const auto& [e, c] : p.terms()) g = rational_gcd(g, c);
    return p.leading_coefficient().sign() < 0 ? -g : g;
}

MultiPoly primitive_part(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p * content(p).inverse();
}

namespace {

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const MultiPoly& p, Var v) {
    MultiPoly g;
    for (const auto& c : p.coefficients_in(v)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? primitive_part(c) : gcd_rec(g, c);
        if (g.is_constant()) return MultiPoly(1);
    }
    return g;
}

MultiPoly primitive_in(const MultiPoly& p, Var v) {
    const MultiPoly c = content_in(p, v);
    if (c.is_constant()) return primitive_part(p);
    return primitive_part(*divide_exact(p, c));
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.is_constant() || b.is_constant()) return MultiPoly(1);
    if (a == b) return primitive_part(a);

    for (Var v : a.variables())
        if (!b.contains(v)) return gcd_rec(content_in(a, v), b);
    for (Var v : b.variables())
        if (!a.contains(v)) return gcd_rec(a, content_in(b, v));

    // Same variable set. Work in the variable of smallest degree.
    Var v = a.variables().front();
    unsigned best = ~0u;
    for (Var cand : a.variables()) {
        const unsigned d = std::max(a.degree(cand), b.degree(cand));
        if (d < best) {
            best = d;
            v = cand;
        }
    }

    const MultiPoly ca = content_in(a, v);
    const MultiPoly cb = content_in(b, v);
    MultiPoly pa = ca.is_constant() ? primitive_part(a) : primitive_part(*divide_exact(a, ca));
    MultiPoly pb = cb.is_constant() ? primitive_part(b) : primitive_part(*divide_exact(b, cb));
    const MultiPoly g = gcd_rec(ca, cb);

    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    while (true) {
        MultiPoly rem = pseudo_remainder(pa, pb, v);
        if (rem.is_zero()) break;
        if (rem.degree(v) == 0) {
            pb = MultiPoly(1);
            break;
        }
        pa = std::move(pb);
        pb = primitive_in(rem, v);
    }
    return primitive_part(g * primitive_in(pb, v));
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    return gcd_rec(a, b);
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, Var v) {
    if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
    const unsigned db = b.degree(v);
    const auto bc = b.coefficients_in(v);
    const MultiPoly& lcb = bc.back();
    const MultiPoly x = MultiPoly::variable(v);
    MultiPoly rem = a;
    while (!rem.is_zero() && rem.degree(v) >= db) {
        const unsigned dr = rem.degree(v);
        const MultiPoly lcr = rem.coefficients_in(v).back();
        const MultiPoly shift = x.pow(dr - db);
        if (auto q = divide_exact(lcr, lcb)) {
            rem -= *q * shift * b;
        } else {
            rem = lcb * rem - lcr * shift * b;
        }
    }
    return rem;
}

}  // namespace bmh
