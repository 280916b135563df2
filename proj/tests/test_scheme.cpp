#include "doctest.h"

#include "bmh/expr.hpp"
#include "bmh/scheme.hpp"

#include <sstream>

using namespace bmh;

namespace {

RatFunc E(const char* s) { return parse_expression(s, scheme_aliases()); }

const EigenData& eigen() {
    static const EigenData e = build_eigen();
    return e;
}

const IntersectionTensor& tensor() {
    static const IntersectionTensor t = intersection_tensor(eigen());
    return t;
}

const std::vector<std::pair<long, long>> kGrid{{4, 2}, {4, 3}, {8, 2}, {8, 3}, {16, 2}, {16, 3}, {32, 2}, {32, 3}};

std::pair<std::size_t, std::size_t> first_pair_in(const SchemeInstance& s, int k) {
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = x + 1; y < s.size(); ++y)
            if (s(x, y) == k) return {x, y};
    FAIL("no pair in relation " << k);
    return {0, 0};
}

}  // namespace

TEST_CASE("build_eigen") {
    const EigenData& e = eigen();
    CHECK(e.P(0, 2) == E("q^2*r^2/2"));
    CHECK(e.P(3, 3).is_zero());
    CHECK(e.n == E("q^2*r^2-1"));
    CHECK(e.n.evaluate(SchemeParams(4, 2).assignment()) == Rational(255));
    RatFunc row0(0);
    for (int j = 0; j < kRelations; ++j) {
        CHECK(e.P(j, 0) == RatFunc(1));
        row0 += e.P(0, j);
    }
    CHECK(row0 == e.n);
    const Matrix<RatFunc> pq = e.P * e.Q;
    for (int i = 0; i < kRelations; ++i)
        for (int j = 0; j < kRelations; ++j) CHECK(pq(i, j) == (i == j ? e.n : RatFunc(0)));
    // Q[0][l] are the multiplicities; they sum to the number of vertices
    RatFunc mult(0);
    for (int l = 0; l < kRelations; ++l) mult += e.Q(0, l);
    CHECK(mult == e.n);
}

TEST_CASE("intersection_tensor") {
    const IntersectionTensor& t = tensor();
    CHECK(t(4, 4, 4) == E("q-3"));
    CHECK(t(2, 2, 0) == E("qm^2/2"));
    CHECK(t(1, 3, 4).is_zero());
    CHECK(t(2, 3, 4).is_zero());
    CHECK(t(3, 3, 3) == E("r^2-2*q+1"));
}

TEST_CASE("check_against_printed_B") {
    const auto mismatches = check_against_printed_B(tensor());
    CHECK(mismatches.empty());

    SUBCASE("perturbed entry is reported with its index") {
        IntersectionTensor bad = tensor();
        bad(0, 0, 0) = RatFunc(2);
        const auto m = check_against_printed_B(bad);
        REQUIRE(m.size() == 1);
        CHECK(m[0].i == 0);
        CHECK(m[0].j == 0);
        CHECK(m[0].k == 0);
        CHECK(m[0].computed == "2");
        CHECK(m[0].expected == "1");
    }
    SUBCASE("the typeset misprint differs in exactly one entry") {
        IntersectionTensor typeset = reference_intersection_tensor();
        for (const auto& entry : typeset_misprints()) typeset(entry.i, entry.j, entry.k) = entry.value;
        const auto m = compare_tensors(tensor(), typeset);
        REQUIRE(m.size() == 1);
        CHECK(m[0].i == 1);
        CHECK(m[0].j == 4);
        CHECK(m[0].k == 2);
        // the machine-checked value agrees with p_{41}^2 from B_4
        CHECK(tensor()(1, 4, 2) == tensor()(4, 1, 2));
        CHECK(tensor()(1, 4, 2) == E("q/2-1"));
    }
}

TEST_CASE("symbolic tensor identities") {
    const auto v = tensor_identity_violations(tensor());
    for (const auto& s : v) MESSAGE(s);
    CHECK(v.empty());
}

TEST_CASE("specialization on the parameter grid") {
    for (auto [q, m] : kGrid) {
        CAPTURE(q);
        CAPTURE(m);
        const ConcreteTensor c = specialize(tensor(), SchemeParams(q, m));
        CHECK(integrality_violations(c).empty());
        CHECK(tensor_identity_violations(c).empty());
        Rational total(0);
        for (int i = 0; i < kRelations; ++i) total += c.valency(i);
        CHECK(total == c.n);
    }
    SUBCASE("odd q is not integral") {
        const ConcreteTensor c = specialize(tensor(), SchemeParams(5, 2));
        CHECK_FALSE(integrality_violations(c).empty());
    }
}

TEST_CASE("SchemeParams preconditions") {
    CHECK_THROWS_AS(SchemeParams(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(SchemeParams(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(SchemeParams(1024, 4), std::invalid_argument);
    const SchemeParams p(4, 2);
    CHECK(p.r() == 4);
    CHECK(p.n() == 255);
}

TEST_CASE("a corrupted tensor breaks the identities") {
    ConcreteTensor c = specialize(tensor(), SchemeParams(4, 2));
    c(1, 1, 1) += Rational(1);
    CHECK_FALSE(tensor_identity_violations(c).empty());
}

TEST_CASE("scheme file round trip and parse errors") {
    const SchemeInstance h = hamming_instance(2);
    std::stringstream ss;
    h.write(ss);
    const SchemeInstance back = SchemeInstance::parse(ss);
    REQUIRE(back.size() == h.size());
    for (std::size_t x = 0; x < h.size(); ++x)
        for (std::size_t y = 0; y < h.size(); ++y) CHECK(back(x, y) == h(x, y));

    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return SchemeInstance::parse(in);
    };
    CHECK_THROWS_AS(parse(""), std::runtime_error);
    CHECK_THROWS_AS(parse("2 3\n0 1\n1 0\n"), std::runtime_error);
    CHECK_THROWS_AS(parse("3 4\n0 1 2\n1 0 1\n"), std::runtime_error);      // truncated
    CHECK_THROWS_AS(parse("2 4\n0 1\n2 0\n"), std::runtime_error);          // asymmetric
    CHECK_THROWS_AS(parse("2 4\n1 1\n1 0\n"), std::runtime_error);          // diagonal
    CHECK_THROWS_AS(parse("2 4\n0 5\n5 0\n"), std::runtime_error);          // range
    CHECK_THROWS_AS(parse("2 4\n0 1 1\n1 0\n"), std::runtime_error);        // long row
    CHECK_NOTHROW(parse("2 4\n0 1\n1 0\n"));
    CHECK_THROWS_AS(SchemeInstance::load("/nonexistent/scheme.txt"), std::runtime_error);
}

TEST_CASE("validate_instance on Hamming schemes") {
    for (int s : {2, 3}) {
        CAPTURE(s);
        const SchemeInstance h = hamming_instance(s);
        const ConcreteTensor t = tensor_from_instance(h);
        CHECK(integrality_violations(t).empty());
        CHECK(tensor_identity_violations(t).empty());

        ValidateOptions opts;
        opts.exhaustive = true;
        const InstanceReport full = validate_instance(h, t, opts);
        CHECK(full.passed);
        CHECK(full.pairs_checked == h.size() * (h.size() - 1) / 2);

        ValidateOptions sampled;
        const InstanceReport par = validate_instance(h, t, sampled);
        sampled.execution = Execution::serial;
        const InstanceReport ser = validate_instance(h, t, sampled);
        CHECK(par.passed);
        CHECK(ser.passed);
        CHECK(par.pairs_checked == 4 * sampled.samples_per_class);
    }
}

TEST_CASE("validate_instance detects faults with witnesses") {
    const SchemeInstance good = hamming_instance(3);
    const ConcreteTensor t = tensor_from_instance(good);

    SUBCASE("edge relabelled from 1 to 2") {
        SchemeInstance bad = good;
        auto [x, y] = first_pair_in(bad, 1);
        bad.set(x, y, 2);
        bad.set(y, x, 2);
        for (Execution ex : {Execution::serial, Execution::parallel}) {
            ValidateOptions opts;
            opts.execution = ex;
            opts.exhaustive = true;
            opts.max_witnesses = 1000;
            const InstanceReport rep = validate_instance(bad, t, opts);
            CHECK_FALSE(rep.passed);
            bool v1 = false, v2 = false, other = false;
            for (const auto& w : rep.failures)
                if (w.check == "valency") {
                    CHECK((w.x == long(x) || w.x == long(y)));
                    v1 |= w.i == 1;
                    v2 |= w.i == 2;
                    other |= w.i != 1 && w.i != 2;
                }
            CHECK(v1);
            CHECK(v2);
            CHECK_FALSE(other);
        }
    }
    SUBCASE("asymmetric matrix") {
        SchemeInstance bad = good;
        auto [x, y] = first_pair_in(bad, 3);
        bad.set(x, y, 4);
        const InstanceReport rep = validate_instance(bad, t);
        CHECK_FALSE(rep.passed);
        REQUIRE(rep.failures.size() == 1);
        CHECK(rep.failures[0].check == "symmetry");
        CHECK(rep.failures[0].x == long(x));
        CHECK(rep.failures[0].y == long(y));
    }
    SUBCASE("wrong size") {
        const InstanceReport rep = validate_instance(hamming_instance(2), t);
        CHECK_FALSE(rep.passed);
        CHECK(rep.failures.at(0).check == "size");
    }
    SUBCASE("serial and parallel reports agree on an intersection fault") {
        ConcreteTensor wrong = t;
        wrong(1, 1, 2) += Rational(1);
        wrong(1, 2, 2) -= Rational(1);
        ValidateOptions opts;
        opts.max_witnesses = 50;
        const InstanceReport par = validate_instance(good, wrong, opts);
        opts.execution = Execution::serial;
        const InstanceReport ser = validate_instance(good, wrong, opts);
        CHECK_FALSE(par.passed);
        REQUIRE(par.failures.size() == ser.failures.size());
        for (std::size_t i = 0; i < par.failures.size(); ++i) CHECK(par.failures[i].str() == ser.failures[i].str());
        CHECK(par.failures.at(0).check == "intersection");
    }
}
