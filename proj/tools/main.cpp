#include "commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace bmh;
using namespace bmh::cli;

namespace {

struct RawOptions {
    std::optional<long> q, m;
    std::string family;
    std::optional<int> branch;
    std::optional<unsigned> precision;
    std::optional<std::string> tol;
    std::optional<std::string> scheme;
    std::string format = "text";
    std::uint64_t seed = 1;
    std::string fault = "none";
    std::string output;
    bool grid = false, symbolic = false, exact = false, numeric = false, exhaustive = false;
    std::vector<std::string> coeffs;
    std::optional<std::string> poly;
    std::string lo = "-inf", hi = "inf";
    bool p9 = false;
    std::optional<long> expect;
};

void common(CLI::App* sub, RawOptions& o) {
    sub->add_option("--precision", o.precision, "MPFR precision in bits (default: $BMH_PRECISION or 256)");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output,-o", o.output, "also write the JSON report to this file");
    sub->add_option("--seed", o.seed, "seed for sampled checks");
    sub->add_option("--inject-fault", o.fault, "corrupt an input on purpose: tensor, w2 or instance")
        ->check(CLI::IsMember({"none", "tensor", "w2", "instance"}));
}

void point(CLI::App* sub, RawOptions& o) {
    sub->add_option("--q", o.q, "prime power q >= 4");
    sub->add_option("--m", o.m, "m >= 2");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bmh: exact and high-precision checks for a family of complex Hadamard matrices in a 4-class "
                 "association scheme"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);
    RawOptions o;

    auto* params = app.add_subcommand("params", "eigenmatrices, intersection numbers and their consistency");
    point(params, o);
    params->add_flag("--symbolic", o.symbolic, "work over Q(q, r) and check integrality on the default grid");
    common(params, o);

    auto* had = app.add_subcommand("hadamard", "generator zeros and Gram identity for one family");
    had->add_option("--family", o.family, "I, II or VI")->required();
    point(had, o);
    had->add_option("--branch", o.branch, "complex embedding 0 or 1 (default: both)");
    had->add_flag("--symbolic", o.symbolic, "check generator zeros over Q(q, r)");
    auto* ex = had->add_flag("--exact", o.exact, "quadratic-extension arithmetic only");
    auto* nu = had->add_flag("--numeric", o.numeric, "MPFR arithmetic only");
    ex->excludes(nu);
    had->add_option("--tol", o.tol, "numeric tolerance (default 2^-80 * n)");
    common(had, o);

    auto* nom = app.add_subcommand("nomura", "obstructions to a larger Nomura algebra");
    nom->add_option("--family", o.family, "I or II (default: both)");
    point(nom, o);
    nom->add_flag("--grid", o.grid, "run the default grid {4,8,16,32} x {2,3}");
    nom->add_flag("--symbolic", o.symbolic, "symmetry sums over Q(q, r)");
    common(nom, o);

    auto* dense = app.add_subcommand("dense", "validate a scheme file and check W W* = n I on it");
    dense->add_option("--scheme", o.scheme, "relation matrix file")->required();
    dense->add_option("--family", o.family, "I, II or VI (default: I and II)");
    point(dense, o);
    dense->add_option("--branch", o.branch, "complex embedding 0 or 1 (default: both)");
    dense->add_option("--tol", o.tol, "max residual (default 1e-30)");
    dense->add_flag("--exhaustive", o.exhaustive, "count intersection numbers for every pair");
    common(dense, o);

    auto* sturm = app.add_subcommand("sturm", "count real roots in an interval");
    sturm->add_option("--coeffs", o.coeffs, "coefficients, highest degree first")->allow_extra_args();
    sturm->add_option("--poly", o.poly, "polynomial in x, e.g. 'x^2-1'");
    sturm->add_option("--lo", o.lo, "lower endpoint (rational or -inf)");
    sturm->add_option("--hi", o.hi, "upper endpoint (rational or inf)");
    sturm->add_flag("--paper-p9", o.p9, "the degree-9 polynomial satisfied by a04 at (q, m) = (4, 2), on (-2, 2)");
    sturm->add_option("--expect", o.expect, "expected count; the check fails otherwise");
    common(sturm, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;  // --help and --version exit 0
    }

    try {
        RunConfig cfg;
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.q = o.q;
        cfg.m = o.m;
        cfg.grid = o.grid;
        cfg.symbolic = o.symbolic;
        if (!o.family.empty()) {
            try {
                cfg.family = parse_family(o.family);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        cfg.branch = o.branch;
        cfg.precision = o.precision ? *o.precision : default_precision();
        cfg.tolerance = o.tol;
        cfg.scheme = o.scheme;
        cfg.format = o.format == "json" ? Format::json : Format::text;
        cfg.seed = o.seed;
        cfg.fault = parse_fault(o.fault);
        if (o.exact || o.numeric) {
            cfg.exact = o.exact;
            cfg.numeric = o.numeric;
        }
        cfg.exhaustive = o.exhaustive;
        cfg.coeffs = o.coeffs;
        cfg.poly = o.poly;
        cfg.lo = o.lo;
        cfg.hi = o.hi;
        cfg.p9 = o.p9;
        cfg.expect = o.expect;

        const Report rep = run(cfg);
        if (cfg.format == Format::json)
            std::cout << to_json(rep).dump(2) << '\n';
        else
            std::cout << render_text(rep);
        if (!o.output.empty()) {
            std::ofstream out(o.output);
            if (!out) throw UsageError("cannot write " + o.output);
            out << to_json(rep).dump(2) << '\n';
        }
        return rep.passed() ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "bmh: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "bmh: " << e.what() << '\n';
        return 2;
    }
}
