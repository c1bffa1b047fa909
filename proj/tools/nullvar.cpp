// nullvar: command-line surface over the toolkit.
// Exit codes: 0 pass, 1 check failure, 2 usage (including unreadable or
// invalid specs and unsupported domains), 3 numerical failure.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "nullvar/counterexample.hpp"
#include "nullvar/errors.hpp"
#include "nullvar/null_variety.hpp"
#include "nullvar/parallel.hpp"
#include "nullvar/perturb.hpp"
#include "nullvar/report.hpp"
#include "nullvar/spec_io.hpp"
#include "nullvar/special.hpp"
#include "nullvar/spectrum.hpp"
#include "nullvar/suites.hpp"
#include "nullvar/tolerances.hpp"

using namespace nullvar;

namespace {

enum Exit { kPass = 0, kCheckFailure = 1, kUsage = 2, kNumerical = 3 };

struct Flags {
    std::string spec, suite, out, format = "table", kind;
    std::uint64_t seed = 1;
    int count = -1;
    int resolution = -1;
    double bound = 0.0;
    unsigned workers = 1;
};

void emit(const std::string& text, const Flags& f) {
    if (f.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(f.out);
    if (!out) throw ParseError("cannot write " + f.out);
    out << text;
}

std::string quantity(double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

int runKappa(const Flags& f) {
    const auto spec = loadDomain(f.spec);
    KappaOptions o;
    o.resolution = f.resolution > 0 ? f.resolution : 720;
    o.bound = f.bound;
    o.workers = f.workers;
    const auto r = kappa(spec, o);
    Table t;
    t.title = "kappa";
    t.provenance = {{"toolkit", toolkitVersion()}, {"spec", f.spec}, {"resolution", std::to_string(o.resolution)},
                    {"bound", quantity(f.bound)}};
    t.columns = {"quantity", "value"};
    t.rows.push_back({std::string("domain"), typeName(spec)});
    t.rows.push_back({std::string("kappa"), r.kappa ? quantity(*r.kappa) : "exceeds(" + quantity(r.searchBound) + ")"});
    if (r.kappa) t.rows.push_back({std::string("argmin angle"), r.argminAngle});
    t.rows.push_back({std::string("closed form"), r.closedForm});
    if (!r.closedForm) t.rows.push_back({std::string("search bound"), r.searchBound});
    std::cout << render(t, parseFormat(f.format));
    if (!f.out.empty()) {
        // the sampled first null curve (angle, κ₁(e))
        Table c;
        c.columns = {"angle", "kappa1"};
        for (const auto& [a, k] : r.perDirection) c.rows.push_back({a, k});
        std::ofstream out(f.out);
        if (!out) throw ParseError("cannot write " + f.out);
        out << render(c, Format::Csv);
    }
    return kPass;
}

int runEigen(const Flags& f) {
    const auto spec = loadDomain(f.spec);
    EigenOptions o;
    o.count = f.count > 0 ? f.count : 6;
    if (f.resolution > 0) o.boundaryPoints = f.resolution;
    o.workers = f.workers;
    const auto d = dirichletEigs(spec, o);
    const auto n = neumannEigs(spec, o);
    Table t;
    t.title = "eigenvalues (" + d.method + ")";
    t.provenance = {{"toolkit", toolkitVersion()}, {"spec", f.spec}, {"boundary points", std::to_string(o.boundaryPoints)}};
    t.columns = {"k", "dirichlet", "dirichlet rel. accuracy", "neumann", "neumann rel. accuracy"};
    for (int i = 0; i < o.count; ++i)
        t.rows.push_back({std::int64_t(i + 1), d.values[i], d.accuracy[i], n.values[i], n.accuracy[i]});
    emit(render(t, parseFormat(f.format)), f);
    return kPass;
}

int runVerify(const Flags& f) {
    SuiteOptions o;
    o.seed = f.seed;
    if (f.count > 0) o.count = f.count;
    if (f.resolution > 0) o.resolution = f.resolution;
    o.workers = f.workers;
    const auto r = runSuite(f.suite, o);
    const Format fmt = parseFormat(f.format);
    emit(render(r, fmt), f);
    if (!f.out.empty()) std::cout << render(r, Format::Table);
    return r.pass() ? kPass : kCheckFailure;
}

int runSweep(const Flags& f) {
    const auto members = loadFamily(f.spec);
    const int res = f.resolution > 0 ? f.resolution : 360;
    std::vector<SweepRow> rows(members.size());
    parallelFor(members.size(), f.workers,
                [&](std::size_t i) { rows[i] = sweepRow(members[i].label, members[i].parameter, members[i].spec, res); });
    Table t = sweepTable(rows);
    t.provenance = {{"toolkit", toolkitVersion()}, {"family", f.spec}, {"resolution", std::to_string(res)}};
    emit(render(t, parseFormat(f.format)), f);
    return kPass;
}

int runSpiky(const Flags& f) {
    int n = f.count > 0 ? f.count : 256;
    ZetaProfile z = counterex::chooseDelta(0.2);
    if (!f.spec.empty()) {
        const auto spec = loadDomain(f.spec);
        const auto* s = std::get_if<shape::Spiky>(&spec);
        if (!s) throw UnsupportedDomain("counterexample spiky: the spec must be of type \"spiky\"");
        z = s->zeta;
        if (f.count <= 0) n = s->n;
    }
    const int dirs = f.resolution > 0 ? f.resolution : 720;
    const auto r = counterex::verifySpiky(n, z, f.bound, dirs, 512, f.workers);
    nlohmann::ordered_json cert = {{"certificate", "spiky"},
                                   {"toolkit", toolkitVersion()},
                                   {"n", r.n},
                                   {"deltaTilde", z.deltaTilde},
                                   {"delta", z.delta},
                                   {"a", z.a},
                                   {"directions", r.directions},
                                   {"radii", r.radii},
                                   {"gammaMax", r.gammaMax},
                                   {"minimum", r.minimum},
                                   {"minAngle", r.minAngle},
                                   {"minGamma", r.minGamma},
                                   {"limitGap", r.limitGap},
                                   {"certified", r.pass()}};
    Table t;
    t.title = "spiky domain certificate";
    t.columns = {"quantity", "value"};
    for (const auto& [k, v] : cert.items())
        t.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.is_boolean() ? (v.get<bool>() ? "true" : "false")
                                                                                 : v.dump()});
    std::cout << render(t, parseFormat(f.format));
    if (!f.out.empty()) emit(cert.dump(2) + "\n", f);
    if (!r.pass())
        std::cerr << "not certified: directional transform " << r.minimum << " at angle " << r.minAngle << ", gamma "
                  << r.minGamma << "\n";
    return r.pass() ? kPass : kCheckFailure;
}

int runNazarov(const Flags& f) {
    const double C = f.bound > 0.0 ? f.bound : 5.0;
    const auto inst = counterex::nazarovSearch(C, f.seed);
    const auto b = counterex::intervalUnionKappa(inst);
    nlohmann::ordered_json cert = {{"certificate", "intervalUnion"},
                                   {"toolkit", toolkitVersion()},
                                   {"C", C},
                                   {"seed", inst.seed},
                                   {"n", inst.n},
                                   {"attempts", inst.attempts},
                                   {"count", inst.w.size()},
                                   {"gridStep", inst.gridStep},
                                   {"gridMinimum", inst.gridMinimum},
                                   {"derivativeBound", inst.derivativeBound},
                                   {"certifiedMinimum", inst.certifiedMinimum},
                                   {"kappaLowerBound", b.kappaLowerBound},
                                   {"volume", b.volume},
                                   {"kappaTimesVolume", b.product},
                                   {"w", inst.w}};
    Table t;
    t.title = "interval union certificate";
    t.columns = {"quantity", "value"};
    for (const auto& [k, v] : cert.items())
        if (k != "w") t.rows.push_back({k, v.is_string() ? v.get<std::string>() : v.dump()});
    std::cout << render(t, parseFormat(f.format));
    if (!f.out.empty()) emit(cert.dump(2) + "\n", f);
    return inst.certified() ? kPass : kCheckFailure;
}

int runPerturb(const Flags& f) {
    RadialProfile F = RadialProfile::mode(1, 1.0);
    double eps = 1e-3;
    if (!f.spec.empty()) {
        const auto spec = loadDomain(f.spec);
        const auto* s = std::get_if<shape::StarShaped>(&spec);
        if (!s) throw UnsupportedDomain("perturb: the spec must be of type \"star\"");
        F = s->profile;
        eps = s->epsilon;
    }
    const auto& tol = tolerances();
    const auto rep = perturb::perturbationReport(F);
    Table t;
    t.title = "first-order perturbation of the unit disk";
    t.provenance = {{"toolkit", toolkitVersion()}, {"seed", std::to_string(f.seed)}};
    t.columns = {"quantity", "value"};
    t.rows.push_back({std::string("d sqrt(lambda2)/d eps"), rep.dSqrtLambda2});
    t.rows.push_back({std::string("d kappa/d eps"), rep.dKappa});
    t.rows.push_back({std::string("L_F"), rep.lhsP1});
    t.rows.push_back({std::string("-A |F_2|"), rep.rhsP1});
    t.rows.push_back({std::string("rotation angle"), rep.rotationAngle});
    bool ok = rep.lhsP1 <= rep.rhsP1 + tol.p1Margin;
    if (eps > 0.0) {
        const auto fd = perturb::finiteDifferenceCheck(F, eps, f.workers);
        t.rows.push_back({std::string("eps"), eps});
        t.rows.push_back({std::string("kappa quotient"), fd.kappaQuotient});
        t.rows.push_back({std::string("sqrt(lambda2) quotient"), fd.sqrtLambdaQuotient});
    }
    if (f.count > 0) {
        std::mt19937_64 rng(f.seed);
        int violations = 0;
        double worst = std::numeric_limits<double>::infinity();
        for (int i = 0; i < f.count; ++i) {
            const auto p = perturb::inequalityP1(perturb::randomProfile(rng));
            worst = std::min(worst, p.rhs - p.lhs);
            if (p.lhs > p.rhs + tol.p1Margin) ++violations;
        }
        t.rows.push_back({std::string("random profiles"), std::int64_t(f.count)});
        t.rows.push_back({std::string("(p1) violations"), std::int64_t(violations)});
        t.rows.push_back({std::string("(p1) smallest margin"), worst});
        ok = ok && violations == 0;
    }
    emit(render(t, parseFormat(f.format)), f);
    return ok ? kPass : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nullvar: null varieties of characteristic functions and Laplacian spectra"};
    app.require_subcommand(1);
    Flags f;
    const std::vector<std::string> formats{"table", "csv", "json-shaped"};

    auto common = [&](CLI::App* s) {
        s->add_option("--format", f.format, "output format")->check(CLI::IsMember(formats));
        s->add_option("--out", f.out, "output file");
        s->add_option("--workers", f.workers, "worker threads")->check(CLI::Range(1u, 256u));
    };
    auto* kap = app.add_subcommand("kappa", "distance from the origin to the null variety");
    kap->add_option("--spec", f.spec, "domain spec file")->required();
    kap->add_option("--resolution", f.resolution, "directions on [0, pi)");
    kap->add_option("--bound", f.bound, "search bound for |xi|");
    common(kap);

    auto* eig = app.add_subcommand("eigen", "Dirichlet and Neumann eigenvalues");
    eig->add_option("--spec", f.spec, "domain spec file")->required();
    eig->add_option("--count", f.count, "eigenvalues per boundary condition (at most 10)");
    eig->add_option("--resolution", f.resolution, "boundary collocation points");
    common(eig);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", f.suite, "suite name")->required()->check(CLI::IsMember(kSuiteNames));
    ver->add_option("--seed", f.seed, "corpus / profile seed");
    ver->add_option("--count", f.count, "domains per family or random profiles");
    ver->add_option("--resolution", f.resolution, "directions for kappa");
    common(ver);

    auto* swp = app.add_subcommand("sweep", "evaluate a parametric domain family");
    swp->add_option("--spec", f.spec, "family file")->required();
    swp->add_option("--resolution", f.resolution, "directions for kappa");
    common(swp);

    auto* cex = app.add_subcommand("counterexample", "spiky domain or interval union certificate");
    cex->add_option("kind", f.kind, "spiky or nazarov")->required()->check(CLI::IsMember({"spiky", "nazarov"}));
    cex->add_option("--spec", f.spec, "spiky spec file");
    cex->add_option("--count", f.count, "number of spikes n");
    cex->add_option("--resolution", f.resolution, "directions");
    cex->add_option("--bound", f.bound, "gamma max (spiky) or C (nazarov)");
    cex->add_option("--seed", f.seed, "search seed (nazarov)");
    common(cex);

    auto* per = app.add_subcommand("perturb", "derivatives of kappa and sqrt(lambda2) at the disk");
    per->add_option("--spec", f.spec, "star spec: profile and epsilon for the difference quotients");
    per->add_option("--seed", f.seed, "seed for random profiles");
    per->add_option("--count", f.count, "random profiles checked against (p1)");
    common(per);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kUsage;
    }
    try {
        if (kap->parsed()) return runKappa(f);
        if (eig->parsed()) return runEigen(f);
        if (ver->parsed()) return runVerify(f);
        if (swp->parsed()) return runSweep(f);
        if (cex->parsed()) return f.kind == "spiky" ? runSpiky(f) : runNazarov(f);
        if (per->parsed()) return runPerturb(f);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidDomain& e) {
        std::cerr << "invalid domain: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedDomain& e) {
        std::cerr << "unsupported domain: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << " (residual " << e.residual() << ")\n";
        return kNumerical;
    }
    return kUsage;
}
