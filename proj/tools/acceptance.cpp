// Acceptance run: one line per criterion, exit status 0 iff none failed.

#include "commands.hpp"

#include "bmh/nomura.hpp"
#include "bmh/reference_data.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>

using namespace bmh;
using namespace bmh::cli;

namespace {

struct Outcome {
    Status status = Status::pass;
    std::string note;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> body;
};

const IntersectionTensor& tensor() {
    static const IntersectionTensor t = intersection_tensor(build_eigen());
    return t;
}

Outcome fail(std::string why) { return {Status::fail, std::move(why)}; }

std::string tag(const SchemeParams& p, Family f) { return to_string(f) + " at " + p.str(); }

WExact exact_weights(Family f, const SchemeParams& p) {
    const auto [i0, i1] = recovery_pair(f);
    return recover_w(family_avector(f, p), i0, i1).w;
}

// --- randomized property suites -------------------------------------------

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    Rational rational() { return Rational(integer(-9, 9), integer(1, 6)); }
    MultiPoly poly(const std::vector<Var>& pool) {
        MultiPoly p;
        const long terms = integer(0, 5);
        for (long t = 0; t < terms; ++t) {
            std::vector<std::pair<Var, unsigned>> powers;
            long budget = integer(0, 8);
            for (Var v : pool) {
                if (budget == 0) break;
                const long e = integer(0, std::min(budget, 3L));
                if (e > 0) powers.emplace_back(v, static_cast<unsigned>(e));
                budget -= e;
            }
            p += MultiPoly::monomial(rational(), powers);
        }
        return p;
    }
};

const std::vector<Var> kPool{var::X(0, 1), var::X(2, 3), var::q, var::r, var::x, var::y};
constexpr int kTrials = 1000;

std::string ring_axioms() {
    Gen g(0xacc01);
    for (int i = 0; i < kTrials; ++i) {
        const MultiPoly a = g.poly(kPool), b = g.poly(kPool), c = g.poly(kPool);
        if (!(a + b == b + a && a * b == b * a && (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) &&
              a * (b + c) == a * b + a * c && (a - a).is_zero()))
            return "ring axiom fails for a = " + a.str() + ", b = " + b.str() + ", c = " + c.str();
    }
    return {};
}

std::string evaluation_homomorphism() {
    Gen g(0xacc02);
    for (int i = 0; i < kTrials; ++i) {
        const MultiPoly a = g.poly(kPool), b = g.poly(kPool);
        std::map<Var, Rational> pt;
        for (Var v : kPool) pt[v] = g.rational();
        if ((a + b).evaluate(pt) != a.evaluate(pt) + b.evaluate(pt) ||
            (a * b).evaluate(pt) != a.evaluate(pt) * b.evaluate(pt))
            return "evaluation is not multiplicative/additive for a = " + a.str() + ", b = " + b.str();
    }
    return {};
}

std::string sturm_vs_scan() {
    Gen g(0xacc03);
    const MultiPoly x = MultiPoly::variable(var::x);
    for (int i = 0; i < kTrials; ++i) {
        const long k = g.integer(0, 6);
        std::set<long> slots;
        while (static_cast<long>(slots.size()) < k) slots.insert(g.integer(-30, 30));
        MultiPoly p(Rational(g.integer(1, 9)));
        for (long s : slots) p *= x - Rational(s, 2);
        if (g.integer(0, 1)) p *= x.pow(2) + Rational(g.integer(1, 9), 4);
        const long lo4 = 2 * g.integer(-40, 30) + 1;
        const long hi4 = lo4 + 2 * g.integer(1, 40);
        const Rational lo(lo4, 4), hi(hi4, 4);
        const std::size_t count = sturm_count(p, lo, hi).count;

        const auto c = dense_coefficients(p);
        auto value = [&](long double t) {
            long double acc = 0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + static_cast<long double>(it->to_double());
            return acc;
        };
        const long double a = lo.to_double(), b = hi.to_double();
        std::size_t changes = 0;
        long double prev = value(a);
        for (int s = 1; s <= 10000; ++s) {
            const long double cur = value(a + (b - a) * s / 10000);
            if ((prev < 0) != (cur < 0)) ++changes;
            prev = cur;
        }
        if (changes != count)
            return "sturm count " + std::to_string(count) + " vs scan " + std::to_string(changes) + " for " + p.str();
    }
    return {};
}

// --- criteria ---------------------------------------------------------------

std::vector<Criterion> criteria(const std::optional<std::string>& scheme) {
    std::vector<Criterion> out;

    out.push_back({1, "intersection tensor equals the reference B-matrices (125 entries)", 5, [] {
                       const IntersectionTensor t = intersection_tensor(build_eigen());
                       const auto mm = check_against_printed_B(t);
                       if (!mm.empty())
                           return fail("p[" + std::to_string(mm[0].i) + "][" + std::to_string(mm[0].j) + "][" +
                                       std::to_string(mm[0].k) + "] = " + mm[0].computed + ", table " + mm[0].expected);
                       return Outcome{Status::pass, "125/125 entries"};
                   }});

    out.push_back({2, "families I and II annihilate every g, h, e_k over Q(q, r)", 30, [] {
                       const auto gens = full_generator_set(build_eigen());
                       for (Family f : {Family::I, Family::II}) {
                           const CommonZeroReport r = verify_common_zero(family_avector(f), gens);
                           if (!r.passed())
                               return fail(to_string(f) + ": " + r.nonzero[0].generator + " = " + r.nonzero[0].value);
                       }
                       return Outcome{Status::pass, std::to_string(gens.size()) + " generators, 2 families"};
                   }});

    out.push_back({3, "exact Gram identity S = (n,0,0,0,0) on the grid", 10, [] {
                       for (auto [q, m] : default_grid()) {
                           const SchemeParams p(q, m);
                           const ConcreteTensor t = specialize(tensor(), p);
                           for (Family f : {Family::I, Family::II})
                               if (!is_hadamard(gram_coefficients(exact_weights(f, p), t), Rational(p.n())))
                                   return fail(tag(p, f));
                       }
                       return Outcome{Status::pass, "8 points x 2 families"};
                   }});

    out.push_back({4, "unimodular weights at 256 bits; family VI Gram residual <= 2^-80 * 255", 0, [] {
                       const BigFloat eps(Rational(1) / Rational(10).pow(20), 256);
                       for (auto [q, m] : default_grid()) {
                           const SchemeParams p(q, m);
                           for (Family f : {Family::I, Family::II})
                               for (int b : {0, 1}) {
                                   const NumericW w = numeric_w(f, p, b, 256);
                                   if (w.modulus_defect > eps)
                                       return fail(tag(p, f) + " branch " + std::to_string(b) + ": defect " +
                                                   w.modulus_defect.str(6));
                               }
                       }
                       const SchemeParams p(4, 2);
                       const ConcreteTensor t = specialize(tensor(), p);
                       const BigFloat tol = default_gram_tolerance(Rational(255), 256);
                       for (int b : {0, 1}) {
                           const NumericW w = numeric_w(Family::VI, p, b, 256);
                           if (w.modulus_defect > eps) return fail("VI branch " + std::to_string(b));
                           const GramNumeric s = gram_coefficients(w.w, t);
                           for (int k = 1; k < kRelations; ++k)
                               if (s[k].abs() > tol)
                                   return fail("VI branch " + std::to_string(b) + ": |S[" + std::to_string(k) +
                                               "]| = " + s[k].abs().str(6));
                       }
                       return Outcome{Status::pass, "grid I/II and VI, both branches"};
                   }});

    out.push_back({5, "degree-9 polynomial for a04 at (4,2) has one real root in (-2,2)", 5, [] {
                       const SturmResult s = sturm_count(reference::a04_degree9_q4m2(), Rational(-2), Rational(2));
                       if (s.count != 1) return fail(std::to_string(s.count) + " roots");
                       return Outcome{Status::pass, "1 root"};
                   }});

    out.push_back({6, "symmetry sums match the closed forms for families I and II", 0, [] {
                       for (Family f : {Family::I, Family::II}) {
                           const SymmetryCheck c = check_symmetry(f, tensor());
                           if (!c.mismatched.empty())
                               return fail(to_string(f) + " sum " + std::to_string(c.mismatched[0]) + " differs");
                           if (!c.uncertified.empty())
                               return fail(to_string(f) + " sum " + std::to_string(c.uncertified[0]) +
                                           " lacks a positivity certificate");
                       }
                       return Outcome{Status::pass, "8 sums"};
                   }});

    out.push_back({7, "cijk coefficient matrix has rank 7 on the grid", 0, [] {
                       for (auto [q, m] : default_grid()) {
                           const SchemeParams p(q, m);
                           const std::size_t r = cijk_rank(specialize(tensor(), p));
                           if (r != 7) return fail(p.str() + ": rank " + std::to_string(r));
                       }
                       return Outcome{Status::pass, "rank 7 at 8 points"};
                   }});

    out.push_back({8, "first/second claim obstructions and certificates on the grid", 60, [] {
                       for (auto [q, m] : default_grid()) {
                           const SchemeParams p(q, m);
                           const ConcreteTensor t = specialize(tensor(), p);
                           for (Family f : {Family::I, Family::II}) {
                               const WExact w = exact_weights(f, p);
                               const FirstClaimResult a = first_claim_obstruction(w, t);
                               if (!a.passed()) return fail("first claim, " + tag(p, f));
                               if (!second_claim_sums(w, t).passed()) return fail("second claim, " + tag(p, f));
                               for (int claim : {1, 2})
                                   if (claim_certificate(f, claim).evaluate(p.assignment()).is_zero())
                                       return fail("certificate " + std::to_string(claim) + " vanishes, " + tag(p, f));
                           }
                       }
                       if (obstruction_cubic_roots_beyond_255().count != 0) return fail("cubic has a root beyond 255");
                       return Outcome{Status::pass, "8 points x 2 families"};
                   }});

    out.push_back({9, "property suites (1000 trials each) and Bose-Mesner identity", 0, [] {
                       for (auto suite : {ring_axioms, evaluation_homomorphism, sturm_vs_scan})
                           if (std::string w = suite(); !w.empty()) return fail(w);
                       if (auto v = tensor_identity_violations(tensor()); !v.empty()) return fail(v[0]);
                       for (auto [q, m] : default_grid())
                           if (auto v = tensor_identity_violations(specialize(tensor(), SchemeParams(q, m))); !v.empty())
                               return fail(v[0]);
                       return Outcome{Status::pass, "3 x 1000 trials; identities symbolic and on the grid"};
                   }});

    out.push_back({10, "fault injection is detected with a witness", 0, [] {
                       // perturbed tensor entry
                       IntersectionTensor bad = tensor();
                       bad(2, 3, 4) = bad(2, 3, 4) + RatFunc(1);
                       const auto mm = check_against_printed_B(bad);
                       if (mm.size() != 1 || mm[0].i != 2 || mm[0].j != 3 || mm[0].k != 4)
                           return fail("perturbed p[2][3][4] not pinpointed");
                       // negated w2
                       const SchemeParams p(4, 2);
                       WExact w = exact_weights(Family::I, p);
                       w[2] = -w[2];
                       if (is_hadamard(gram_coefficients(w, specialize(tensor(), p)), Rational(255)))
                           return fail("negated w2 still passes");
                       // relabeled instance edge
                       SchemeInstance h = hamming_instance(3);
                       const ConcreteTensor ht = tensor_from_instance(h);
                       const int old = h(0, 1);
                       h.set(0, 1, old % 4 + 1);
                       h.set(1, 0, old % 4 + 1);
                       ValidateOptions opts;
                       opts.exhaustive = true;
                       const InstanceReport r = validate_instance(h, ht, opts);
                       if (r.passed || r.failures.empty()) return fail("relabeled edge not detected");
                       return Outcome{Status::pass, "tensor entry, w2 sign, instance edge (" + r.failures[0].str() + ")"};
                   }});

    out.push_back({11, "dense check W W* = n I on a supplied (4,2) instance", 120, [scheme] {
                       if (!scheme) return Outcome{Status::skipped, "no scheme file supplied (--scheme FILE)"};
                       const SchemeInstance inst = SchemeInstance::load(*scheme);
                       const SchemeParams p(4, 2);
                       if (inst.size() != 255) return fail("instance has " + std::to_string(inst.size()) + " points");
                       ValidateOptions opts;
                       opts.exhaustive = true;
                       const InstanceReport r = validate_instance(inst, specialize(tensor(), p), opts);
                       if (!r.passed) return fail("validation: " + r.failures[0].str());
                       const BigFloat tol(Rational(1) / Rational(10).pow(30), 256);
                       for (Family f : {Family::I, Family::II})
                           for (int b : {0, 1}) {
                               const DenseReport d = dense_verify(inst, numeric_w(f, p, b, 256).w, tol);
                               if (!d.passed)
                                   return fail(to_string(f) + " branch " + std::to_string(b) + ": residual " +
                                               d.max_residual.str(6));
                           }
                       return Outcome{Status::pass, "validated, families I and II"};
                   }});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria 1-11"};
    std::optional<std::string> scheme;
    app.add_option("--scheme", scheme, "relation matrix of a (4,2) instance; criterion 11 is skipped without it");
    CLI11_PARSE(app, argc, argv);

    bool ok = true;
    for (auto& c : criteria(scheme)) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = fail(e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.status == Status::pass && c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.status = Status::fail;
            o.note += "; took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
        }
        ok = ok && o.status != Status::fail;
        std::string s = to_string(o.status);
        for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        std::cout << "criterion " << std::setw(2) << c.id << ": " << std::left << std::setw(8) << s << std::right
                  << c.title << " [" << o.note << "] (" << std::fixed << std::setprecision(2) << secs << " s)\n";
    }
    return ok ? 0 : 1;
}
