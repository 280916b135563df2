#include "bmh/scheme.hpp"

#include "bmh/expr.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bmh {

namespace {

// Row-major element lists, Magma syntax.
constexpr const char* kEigenP[25] = {
    "1", "1/2*qm*r*(q-2)", "1/2*qm^2", "q*(r^2-1)", "q-2",
    "1", "1/2*r*(q-2)", "1/2*qm", "-(r+1)*(q-1)", "q-2",
    "1", "-1/2*r*(q-2)", "-1/2*qm", "(r-1)*(q-1)", "q-2",
    "1", "1/2*qm", "-1/2*qm", "0", "-1",
    "1", "-1/2*qm", "1/2*qm", "0", "-1",
};

constexpr const char* kB[4][25] = {
    {"0", "1", "0", "0", "0",
     "qm*r*(q-2)/2", "r^2*(q-2)^2/4", "r^2*(q-2)^2/4", "r^2*(q-2)^2/4", "(q-4)*qm*r/4",
     "0", "(q-2)*qm*r/4", "(q-2)*qm*r/4", "(q-2)*qm*r/4", "qm^2/4",
     "0", "(q-2)*(r^2-1)/2", "(q-2)*(r^2-1)/2", "(q-2)*r^2/2", "0",
     "0", "1/2*q-2", "1/2*q-1", "0", "0"},
    {"0", "0", "1", "0", "0",
     "0", "(q-2)*qm*r/4", "(q-2)*qm*r/4", "(q-2)*qm*r/4", "qm^2/4",
     "qm^2/2", "qm^2/4", "qm^2/4", "qm^2/4", "qm^2/4",
     "0", "q*(r^2-1)/2", "q*(r^2-1)/2", "1/2*qm*r", "0",
     "0", "1/2*q", "1/2*q-1", "0", "0"},
    {"0", "0", "0", "1", "0",
     "0", "(q-2)*(r^2-1)/2", "(q-2)*(r^2-1)/2", "(q-2)*r^2/2", "0",
     "0", "q*(r^2-1)/2", "q*(r^2-1)/2", "1/2*qm*r", "0",
     "q*(r^2-1)", "r^2-1", "r^2-1", "r^2-2*q+1", "q*(r^2-1)",
     "0", "0", "0", "q-2", "0"},
    {"0", "0", "0", "0", "1",
     "0", "1/2*q-2", "1/2*q-1", "0", "0",
     "0", "1/2*q", "1/2*q-1", "0", "0",
     "0", "0", "0", "q-2", "0",
     "q-2", "0", "0", "0", "q-3"},
};

RatFunc expr(const char* s) { return parse_expression(s, scheme_aliases()); }

std::string to_str(const RatFunc& f) { return f.str(); }
std::string to_str(const Rational& f) { return f.str(); }

std::string ijk(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

template <class T>
Matrix<T> b_matrix(const Tensor3<T>& p, int i) {
    Matrix<T> b(kRelations, kRelations, T(0));
    for (int j = 0; j < kRelations; ++j)
        for (int k = 0; k < kRelations; ++k) b(j, k) = p[i][j][k];
    return b;
}

template <class T>
std::vector<std::string> identity_violations(const Tensor3<T>& p) {
    std::vector<std::string> out;
    auto val = [&](int i) -> const T& { return p[i][i][0]; };
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j) {
            for (int k = 0; k < kRelations; ++k)
                if (!(p[i][j][k] == p[j][i][k])) out.push_back("asymmetric at " + ijk(i, j, k));
            if (i != j && !p[i][j][0].is_zero()) out.push_back("p_ij^0 nonzero at " + ijk(i, j, 0));
        }
    for (int i = 0; i < kRelations; ++i)
        for (int k = 0; k < kRelations; ++k) {
            T sum(0);
            for (int j = 0; j < kRelations; ++j) sum += p[i][j][k];
            if (!(sum == val(i))) out.push_back("row sum of B_" + std::to_string(i) + " column " + std::to_string(k) + " is " + to_str(sum));
        }
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j)
            for (int k = 0; k < kRelations; ++k)
                if (!(val(k) * p[i][j][k] == val(i) * p[j][k][i]))
                    out.push_back("k_k p_ij^k != k_i p_jk^i at " + ijk(i, j, k));
    std::array<Matrix<T>, kRelations> b;
    for (int i = 0; i < kRelations; ++i) b[i] = b_matrix(p, i);
    for (int i = 0; i < kRelations; ++i)
        for (int j = i; j < kRelations; ++j) {
            const Matrix<T> lhs = b[i] * b[j];
            Matrix<T> rhs(kRelations, kRelations, T(0));
            for (int k = 0; k < kRelations; ++k) {
                if (p[i][j][k].is_zero()) continue;
                for (int a = 0; a < kRelations; ++a)
                    for (int c = 0; c < kRelations; ++c) rhs(a, c) += p[i][j][k] * b[k](a, c);
            }
            for (int a = 0; a < kRelations; ++a)
                for (int c = 0; c < kRelations; ++c)
                    if (!(lhs(a, c) == rhs(a, c)))
                        out.push_back("B_" + std::to_string(i) + " B_" + std::to_string(j) + " differs at (" +
                                      std::to_string(a) + "," + std::to_string(c) + ")");
        }
    return out;
}

}  // namespace

EigenData build_eigen() {
    EigenData e;
    e.P = Matrix<RatFunc>(kRelations, kRelations);
    Matrix<MultiPoly> twice(kRelations, kRelations);
    for (int i = 0; i < kRelations * kRelations; ++i) {
        e.P(i / kRelations, i % kRelations) = expr(kEigenP[i]);
        twice(i / kRelations, i % kRelations) = (e.P(i / kRelations, i % kRelations) * Rational(2)).as_polynomial();
    }
    e.n = expr("qm^2-1");

    // (2P)^{-1} = M / d, so Q = n P^{-1} = 2 n M / d
    auto [m, d] = bareiss_inverse(twice);
    e.Q = Matrix<RatFunc>(kRelations, kRelations);
    const MultiPoly scale = e.n.as_polynomial() * Rational(2);
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j) e.Q(i, j) = RatFunc(scale * m(i, j), d);

    const Matrix<RatFunc> pq = e.P * e.Q;
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j)
            if (!(pq(i, j) == (i == j ? e.n : RatFunc(0))))
                throw std::logic_error("build_eigen: P Q != n I at " + std::to_string(i) + "," + std::to_string(j));
    return e;
}

SchemeParams::SchemeParams(long q_, long m_) : q(q_), m(m_) {
    if (q < 4) throw std::invalid_argument("q must be at least 4, got " + std::to_string(q));
    if (m < 2) throw std::invalid_argument("m must be at least 2, got " + std::to_string(m));
    long v = 1;
    for (long e = 0; e < 2 * m; ++e) {
        if (v > (std::numeric_limits<long>::max() >> 2) / q)
            throw std::invalid_argument("q^(2m) too large for q=" + std::to_string(q) + ", m=" + std::to_string(m));
        v *= q;
    }
}

long SchemeParams::r() const {
    long v = 1;
    for (long e = 1; e < m; ++e) v *= q;
    return v;
}

long SchemeParams::n() const { return q * r() * q * r() - 1; }

std::map<Var, Rational> SchemeParams::assignment() const { return {{var::q, Rational(q)}, {var::r, Rational(r())}}; }

std::string SchemeParams::str() const { return "q=" + std::to_string(q) + ", m=" + std::to_string(m); }

Matrix<RatFunc> IntersectionTensor::B(int i) const { return b_matrix(p, i); }
Matrix<Rational> ConcreteTensor::B(int i) const { return b_matrix(p, i); }

IntersectionTensor intersection_tensor(const EigenData& e) {
    IntersectionTensor t;
    std::array<RatFunc, kRelations> weight;  // Q[0][l] / n
    for (int l = 0; l < kRelations; ++l) weight[l] = e.Q(0, l) / e.n;
    for (int k = 0; k < kRelations; ++k) {
        if (e.P(0, k).is_zero()) throw std::domain_error("intersection_tensor: zero valency k_" + std::to_string(k));
        const RatFunc inv_valency = e.P(0, k).inverse();
        for (int i = 0; i < kRelations; ++i)
            for (int j = 0; j < kRelations; ++j) {
                RatFunc sum(0);
                for (int l = 0; l < kRelations; ++l) sum += weight[l] * e.P(l, i) * e.P(l, j) * e.P(l, k);
                t.p[i][j][k] = sum * inv_valency;
            }
    }
    return t;
}

IntersectionTensor reference_intersection_tensor() {
    IntersectionTensor t;
    for (int j = 0; j < kRelations; ++j)
        for (int k = 0; k < kRelations; ++k) t.p[0][j][k] = RatFunc(j == k ? 1 : 0);
    for (int i = 1; i < kRelations; ++i)
        for (int e = 0; e < kRelations * kRelations; ++e) t.p[i][e / kRelations][e % kRelations] = expr(kB[i - 1][e]);
    return t;
}

std::vector<TypesetEntry> typeset_misprints() { return {{1, 4, 2, expr("(q-4)/2")}}; }

std::vector<EntryMismatch> compare_tensors(const IntersectionTensor& computed, const IntersectionTensor& expected) {
    std::vector<EntryMismatch> out;
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j)
            for (int k = 0; k < kRelations; ++k)
                if (!(computed.p[i][j][k] == expected.p[i][j][k]))
                    out.push_back({i, j, k, computed.p[i][j][k].str(), expected.p[i][j][k].str()});
    return out;
}

ConcreteTensor specialize(const IntersectionTensor& t, const SchemeParams& params) {
    ConcreteTensor c;
    const auto at = params.assignment();
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j)
            for (int k = 0; k < kRelations; ++k) c.p[i][j][k] = t.p[i][j][k].evaluate(at);
    c.n = Rational(params.n());
    return c;
}

std::vector<std::string> tensor_identity_violations(const IntersectionTensor& t) { return identity_violations(t.p); }
std::vector<std::string> tensor_identity_violations(const ConcreteTensor& t) { return identity_violations(t.p); }

std::vector<std::string> integrality_violations(const ConcreteTensor& t) {
    std::vector<std::string> out;
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j)
            for (int k = 0; k < kRelations; ++k) {
                const Rational& v = t.p[i][j][k];
                if (!v.is_integer() || v.sign() < 0) out.push_back("p" + ijk(i, j, k) + " = " + v.str());
            }
    return out;
}

// ---------------------------------------------------------------------------
// Instances

SchemeInstance::SchemeInstance(std::size_t n, std::vector<std::uint8_t> rel) : n_(n), rel_(std::move(rel)) {
    if (rel_.size() != n_ * n_) throw std::invalid_argument("SchemeInstance: expected n*n relation values");
}

SchemeInstance SchemeInstance::parse(std::istream& in) {
    auto fail = [](std::size_t line, const std::string& what) -> std::runtime_error {
        return std::runtime_error("scheme file line " + std::to_string(line) + ": " + what);
    };
    std::string text;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, text)) {
            ++line_no;
            if (text.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) throw fail(0, "empty input");
    long n = 0, d = 0;
    {
        std::istringstream hdr(text);
        std::string extra;
        if (!(hdr >> n >> d) || (hdr >> extra)) throw fail(line_no, "expected header 'n d'");
    }
    if (d != 4) throw fail(line_no, "expected d = 4, got " + std::to_string(d));
    if (n <= 0) throw fail(line_no, "n must be positive");

    const auto size = static_cast<std::size_t>(n);
    std::vector<std::uint8_t> rel(size * size);
    for (std::size_t x = 0; x < size; ++x) {
        if (!next_line()) throw fail(line_no, "file ends after " + std::to_string(x) + " of " + std::to_string(n) + " rows");
        std::istringstream row(text);
        for (std::size_t y = 0; y < size; ++y) {
            long v;
            if (!(row >> v)) throw fail(line_no, "row has fewer than " + std::to_string(n) + " entries");
            if (v < 0 || v > 4) throw fail(line_no, "relation value " + std::to_string(v) + " outside 0..4");
            rel[x * size + y] = static_cast<std::uint8_t>(v);
        }
        std::string extra;
        if (row >> extra) throw fail(line_no, "row has more than " + std::to_string(n) + " entries");
    }
    if (next_line()) throw fail(line_no, "trailing data after the last row");

    for (std::size_t x = 0; x < size; ++x) {
        if (rel[x * size + x] != 0) throw fail(x + 2, "diagonal entry is not 0");
        for (std::size_t y = 0; y < x; ++y) {
            if (rel[x * size + y] != rel[y * size + x])
                throw fail(x + 2, "not symmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
            if (rel[x * size + y] == 0)
                throw fail(x + 2, "off-diagonal 0 at (" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
    }
    return SchemeInstance(size, std::move(rel));
}

SchemeInstance SchemeInstance::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scheme file " + path.string());
    return parse(in);
}

void SchemeInstance::write(std::ostream& out) const {
    out << n_ << " 4\n";
    for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) out << (y ? " " : "") << int(rel_[x * n_ + y]);
        out << '\n';
    }
}

SchemeInstance hamming_instance(int s) {
    if (s < 2) throw std::invalid_argument("hamming_instance: alphabet size must be at least 2");
    const std::size_t n = static_cast<std::size_t>(s) * s * s * s;
    std::vector<std::uint8_t> rel(n * n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            int dist = 0;
            for (std::size_t a = x, b = y, c = 0; c < 4; ++c, a /= s, b /= s) dist += (a % s) != (b % s);
            rel[x * n + y] = static_cast<std::uint8_t>(dist);
        }
    return SchemeInstance(n, std::move(rel));
}

ConcreteTensor tensor_from_instance(const SchemeInstance& s) {
    ConcreteTensor t;
    const std::size_t n = s.size();
    t.n = Rational(static_cast<long>(n));
    for (int k = 0; k < kRelations; ++k) {
        std::size_t y = 0;
        while (y < n && s(0, y) != k) ++y;
        if (y == n) throw std::invalid_argument("tensor_from_instance: relation " + std::to_string(k) + " missing from row 0");
        std::array<std::array<long, kRelations>, kRelations> c{};
        for (std::size_t u = 0; u < n; ++u) ++c[s(0, u)][s(y, u)];
        for (int i = 0; i < kRelations; ++i)
            for (int j = 0; j < kRelations; ++j) t.p[i][j][k] = Rational(c[i][j]);
    }
    return t;
}

std::string InstanceWitness::str() const {
    std::ostringstream os;
    os << check;
    if (x >= 0) os << " x=" << x;
    if (y >= 0) os << " y=" << y;
    if (i >= 0) os << " i=" << i;
    if (j >= 0) os << " j=" << j;
    os << " observed=" << observed << " expected=" << expected.str();
    return os.str();
}

namespace {

struct Sample {
    std::size_t x, y;
    int k;
};

std::optional<InstanceWitness> mismatch_in(const std::array<long, kRelations * kRelations>& counts, const Sample& s,
                                           const ConcreteTensor& t) {
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j)
            if (!(Rational(counts[i * kRelations + j]) == t.p[i][j][s.k]))
                return InstanceWitness{"intersection", static_cast<long>(s.x), static_cast<long>(s.y), i, j,
                                       counts[i * kRelations + j], t.p[i][j][s.k]};
    return std::nullopt;
}

// Direct reading of the definition: one pass over u per (i, j).
std::optional<InstanceWitness> check_pair_reference(const SchemeInstance& inst, const Sample& s, const ConcreteTensor& t) {
    std::array<long, kRelations * kRelations> counts{};
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j) {
            long c = 0;
            for (std::size_t u = 0; u < inst.size(); ++u) c += inst(s.x, u) == i && inst(s.y, u) == j;
            counts[i * kRelations + j] = c;
        }
    return mismatch_in(counts, s, t);
}

// Single pass histogram over the two rows.
std::optional<InstanceWitness> check_pair_fast(const SchemeInstance& inst, const Sample& s, const ConcreteTensor& t) {
    std::array<long, kRelations * kRelations> counts{};
    const std::uint8_t* rx = inst.row(s.x);
    const std::uint8_t* ry = inst.row(s.y);
    for (std::size_t u = 0; u < inst.size(); ++u) ++counts[rx[u] * kRelations + ry[u]];
    return mismatch_in(counts, s, t);
}

std::vector<Sample> draw_samples(const SchemeInstance& inst, const ValidateOptions& opts) {
    std::vector<Sample> samples;
    const std::size_t n = inst.size();
    if (opts.exhaustive) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = x + 1; y < n; ++y) samples.push_back({x, y, inst(x, y)});
        return samples;
    }
    std::vector<std::size_t> candidates;
    for (int k = 1; k < kRelations; ++k) {
        std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(k));
        std::uniform_int_distribution<std::size_t> pick_x(0, n - 1);
        for (std::size_t s = 0; s < opts.samples_per_class; ++s) {
            const std::size_t x = pick_x(rng);
            candidates.clear();
            for (std::size_t y = 0; y < n; ++y)
                if (inst(x, y) == k) candidates.push_back(y);
            if (candidates.empty()) continue;
            const std::size_t y = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
            samples.push_back({x, y, k});
        }
    }
    return samples;
}

}  // namespace

InstanceReport validate_instance(const SchemeInstance& s, const ConcreteTensor& t, const ValidateOptions& opts) {
    InstanceReport report;
    auto add = [&](InstanceWitness w) {
        report.passed = false;
        if (report.failures.size() < opts.max_witnesses) report.failures.push_back(std::move(w));
    };
    const std::size_t n = s.size();

    if (!(Rational(static_cast<long>(n)) == t.n)) {
        add({"size", -1, -1, -1, -1, static_cast<long>(n), t.n});
        return report;
    }

    for (std::size_t x = 0; x < n; ++x) {
        if (s(x, x) != 0) add({"diagonal", long(x), long(x), -1, -1, s(x, x), Rational(0)});
        for (std::size_t y = x + 1; y < n; ++y) {
            if (s(x, y) != s(y, x)) add({"symmetry", long(x), long(y), -1, -1, s(y, x), Rational(s(x, y))});
            else if (s(x, y) == 0) add({"diagonal", long(x), long(y), -1, -1, 0, Rational(1)});
        }
    }
    if (!report.passed) return report;

    for (std::size_t x = 0; x < n; ++x) {
        std::array<long, kRelations> count{};
        for (std::size_t y = 0; y < n; ++y) ++count[s(x, y)];
        for (int i = 0; i < kRelations; ++i)
            if (!(Rational(count[i]) == t.valency(i))) add({"valency", long(x), -1, i, -1, count[i], t.valency(i)});
    }

    const std::vector<Sample> samples = draw_samples(s, opts);
    std::vector<std::optional<InstanceWitness>> results(samples.size());
    if (opts.execution == Execution::serial) {
        for (std::size_t idx = 0; idx < samples.size(); ++idx) results[idx] = check_pair_reference(s, samples[idx], t);
    } else {
        const auto count = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(dynamic, 64)
        for (std::ptrdiff_t idx = 0; idx < count; ++idx) results[idx] = check_pair_fast(s, samples[idx], t);
    }
    report.pairs_checked = samples.size();
    for (auto& r : results)
        if (r) add(std::move(*r));
    return report;
}

}  // namespace bmh
