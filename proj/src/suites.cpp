#include "nullvar/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "nullvar/corpus.hpp"
#include "nullvar/counterexample.hpp"
#include "nullvar/errors.hpp"
#include "nullvar/machinery.hpp"
#include "nullvar/null_variety.hpp"
#include "nullvar/parallel.hpp"
#include "nullvar/perturb.hpp"
#include "nullvar/special.hpp"
#include "nullvar/tolerances.hpp"

namespace nullvar {

namespace {

constexpr double kPi = std::numbers::pi;

double j01() { return special::constants::j01(); }
double j11() { return special::constants::j11(); }

// passes only when the margin exceeds err
Check decisive(Check c, double err) {
    c.tolerance = -err;
    c.pass = c.margin > err;
    return c;
}

std::vector<std::pair<std::string, std::string>> provenance(const std::string& suite, const SuiteOptions& opt) {
    return {{"toolkit", toolkitVersion()},
            {"suite", suite},
            {"seed", std::to_string(opt.seed)},
            {"count", std::to_string(opt.count)},
            {"resolution", std::to_string(opt.resolution)}};
}

std::vector<std::pair<std::string, DomainSpec>> labelledCorpus(const SuiteOptions& opt) {
    const auto c = makeCorpus(opt.seed, opt.count, opt.count);
    std::vector<std::pair<std::string, DomainSpec>> out;
    for (std::size_t i = 0; i < c.polygons.size(); ++i) out.emplace_back("polygon " + std::to_string(i), c.polygons[i]);
    for (std::size_t i = 0; i < c.stars.size(); ++i) out.emplace_back("star " + std::to_string(i), c.stars[i]);
    return out;
}

double relErr(const SpectrumResult& r, int i) { return std::max(r.accuracy[i], tolerances().eigenSolver * 1e-2); }

}  // namespace

const std::vector<std::string> kSuiteNames = {"tables", "conjectures", "theorems", "perturbation", "counterexamples"};

double kappaOfEqualAreaDisk(const DomainSpec& spec) {
    if (!isPlanar(spec)) throw UnsupportedDomain("kappa of the equal-area disk: planar domains only");
    return j11() * std::sqrt(kPi / volume(spec));
}

std::vector<Check> kappaBoundChecks(const DomainSpec& spec, double kappa, int directions) {
    const auto& tol = tolerances();
    std::vector<Check> out;
    const double ball = kappaOfEqualAreaDisk(spec);
    out.push_back(checkLE("kappa <= (2 j01/j11) kappa(ball)", kappa, 2 * j01() / j11() * ball, tol.quadratureFT * kappa));
    const double D = descriptors(spec).diameter;
    out.push_back(checkLE("kappa <= 4 pi / D", kappa, 4 * kPi / D, tol.bracket));
    // worst case over directions of κ_j(e) ≤ π(j+1)/w(e), j = 1..4
    std::vector<Check> worst(4);
    for (int j = 1; j <= 4; ++j) {
        worst[j - 1] = checkLE("kappa_" + std::to_string(j) + "(e) <= " + std::to_string(j + 1) + " pi / w(e)", 0.0,
                               std::numeric_limits<double>::infinity(), tol.bracket);
    }
    for (int i = 0; i < directions; ++i) {
        const DirectionalTransform T(spec, Vec2::unit(kPi * (i + 0.5) / directions));
        const double w = T.halfBreadth();
        const auto roots = directionalRoots(T, 5 * kPi / w * (1 + 1e-9), 1024, 4);
        for (int j = 1; j <= 4; ++j) {
            const double bound = kPi * (j + 1) / w;
            // a missing j-th root below the bound is a violation with lhs = +∞
            const double lhs = j <= int(roots.size()) ? roots[j - 1] : std::numeric_limits<double>::infinity();
            const Check c = checkLE(worst[j - 1].name, lhs, bound, tol.bracket);
            if (c.margin < worst[j - 1].margin) worst[j - 1] = c;
        }
    }
    out.insert(out.end(), worst.begin(), worst.end());
    return out;
}

std::vector<Check> conjectureChecks(const DomainSpec& spec, double kappa, const SpectrumResult& d) {
    const auto& tol = tolerances();
    if (d.values.size() < 2) throw DomainError("conjectureChecks: need two Dirichlet eigenvalues");
    std::vector<Check> out;
    out.push_back(checkLE("kappa <= kappa(ball)", kappa, kappaOfEqualAreaDisk(spec), tol.quadratureFT * kappa));
    const double s2 = std::sqrt(d.values[1]);
    // relative error of √λ is half that of λ
    const double err = 0.5 * relErr(d, 1) * s2 + tol.quadratureFT * kappa;
    out.push_back(decisive(checkLE("kappa <= sqrt(lambda2)", kappa, s2), err));
    out.push_back(checkLE("kappa <= 2 sqrt(lambda1)", kappa, 2 * std::sqrt(d.values[0]),
                          0.5 * relErr(d, 0) * 2 * std::sqrt(d.values[0])));
    out.push_back(checkLE("lambda2 relative accuracy <= 1e-3", d.accuracy[1], tol.eigenCompare));
    return out;
}

Check neumannCheck(double kappa, const SpectrumResult& n) {
    if (n.values.size() < 2) throw DomainError("neumannCheck: need mu2");
    const double s = 2 * std::sqrt(n.values[1]);
    // sharp for rectangles, so a tolerance rather than a decisive margin
    return checkGE("kappa >= 2 sqrt(mu2)", kappa, s, 0.5 * relErr(n, 1) * s + tolerances().quadratureFT * kappa);
}

std::vector<Check> ringChecks(const DomainSpec& spec, int samples) {
    const auto d = descriptors(spec);
    const double a = d.rMinus, b = d.rPlus, h = (b - a) / samples;
    std::vector<double> eta(samples + 1), alpha(samples + 1);
    for (int i = 0; i <= samples; ++i) {
        const auto r = ringFunctions(spec, a + h * i);
        eta[i] = r.eta;
        alpha[i] = r.alpha;
    }
    double rise = -std::numeric_limits<double>::infinity(), bend = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) rise = std::max(rise, eta[i + 1] - eta[i]);
    for (int i = 1; i < samples; ++i) bend = std::max(bend, alpha[i + 1] - 2 * alpha[i] + alpha[i - 1]);
    return {checkLE("eta non-increasing on [r-, r+] (max step)", rise, 0.0, 1e-8),
            checkLE("alpha concave on [r-, r+] (max second difference)", bend, 0.0, 1e-8)};
}

VerificationReport tablesSuite() {
    const auto& tol = tolerances();
    VerificationReport r;
    r.suite = "tables";
    r.provenance = {{"toolkit", toolkitVersion()}, {"suite", "tables"}};
    const auto& k = machinery::constants();
    for (const auto& t : k.tableHorizontal) r.add("horizontal table", checkNear(t.name, t.value, t.published, tol.closedForm));
    for (const auto& t : k.tableVertical) r.add("vertical table", checkNear(t.name, t.value, t.published, tol.closedForm));
    r.add("final estimate", checkNear("L y_min + M", k.finalEstimate, -0.0072444612, tol.closedForm));
    r.add("final estimate", checkLE("L y_min + M < 0", k.finalEstimate, 0.0, 0.0, "<"));
    for (double y : {k.yMin, 0.6, 0.7, 0.8, 0.95})
        r.add("y11 = " + std::to_string(y),
              checkNear("key integral closed form ~= quadrature", machinery::keyIntegral(y), machinery::keyIntegralQuadrature(y),
                        tol.keyQuadrature));
    return r;
}

VerificationReport conjecturesSuite(const SuiteOptions& opt) {
    VerificationReport r;
    r.suite = "conjectures";
    r.provenance = provenance(r.suite, opt);
    const auto domains = labelledCorpus(opt);
    std::vector<std::vector<Check>> results(domains.size());
    std::vector<std::string> errors(domains.size());
    parallelFor(domains.size(), opt.workers, [&](std::size_t i) {
        const auto& spec = domains[i].second;
        try {
            const auto k = kappa(spec, {.resolution = opt.resolution});
            if (!k.kappa) throw NumericalFailure("no zero found for a convex domain");
            auto cs = kappaBoundChecks(spec, *k.kappa);
            const auto d = dirichletEigs(spec, {.count = 2});
            for (auto& c : conjectureChecks(spec, *k.kappa, d)) cs.push_back(c);
            cs.push_back(neumannCheck(*k.kappa, neumannEigs(spec, {.count = 2})));
            results[i] = std::move(cs);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < domains.size(); ++i) {
        if (!errors[i].empty()) {
            Check c = checkLE("domain evaluated", 1.0, 0.0);
            c.relation = "error: " + errors[i];
            r.add(domains[i].first, c);
            continue;
        }
        r.add(domains[i].first, results[i]);
    }
    r.notes.push_back("property-based evidence on a seeded corpus, not a proof");
    return r;
}

VerificationReport theoremsSuite(const SuiteOptions& opt) {
    const auto& tol = tolerances();
    VerificationReport r;
    r.suite = "theorems";
    r.provenance = provenance(r.suite, opt);
    const auto domains = labelledCorpus(opt);
    std::vector<std::vector<Check>> results(domains.size());
    std::vector<std::string> errors(domains.size());
    parallelFor(domains.size(), opt.workers, [&](std::size_t i) {
        const auto& spec = domains[i].second;
        try {
            const auto ineq = inequalityChecks(spec);
            std::vector<Check> cs = ineq.checks;
            for (auto& c : kappaBoundChecks(spec, ineq.kappa)) cs.push_back(c);
            for (auto& c : ringChecks(spec)) cs.push_back(c);
            // homothety: κ(2Ω) = κ(Ω)/2
            const auto k2 = kappa(scaled(spec, 2.0), {.resolution = opt.resolution});
            cs.push_back(checkNear("kappa(2 Omega) ~= kappa(Omega) / 2", k2.kappa.value(), 0.5 * ineq.kappa,
                                   tol.quadratureFT * ineq.kappa));
            const auto& d = ineq.dirichlet;
            const double fk = kPi * j01() * j01() / volume(spec);
            cs.push_back(checkGE("lambda1 >= pi j01^2 / vol", d.values[0], fk, relErr(d, 0) * d.values[0]));
            cs.push_back(checkLE("lambda2 < 3 lambda1", d.values[1], 3 * d.values[0], 0.0, "<"));
            const double ab = std::pow(j11() / j01(), 2);
            cs.push_back(checkLE("lambda2 / lambda1 <= (j11/j01)^2", d.values[1] / d.values[0], ab,
                                 (relErr(d, 0) + relErr(d, 1)) * ab));
            if (i % 10 == 0) {
                const auto p = machinery::proofPipeline(spec);
                for (auto c : p.checks) {
                    c.name = "[" + p.branch + "] " + c.name;
                    cs.push_back(c);
                }
            }
            results[i] = std::move(cs);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < domains.size(); ++i) {
        if (!errors[i].empty()) {
            Check c = checkLE("domain evaluated", 1.0, 0.0);
            c.relation = "error: " + errors[i];
            r.add(domains[i].first, c);
            continue;
        }
        r.add(domains[i].first, results[i]);
    }
    for (const auto& c : machinery::cuboidInequality(30)) r.add("cuboid", c);
    for (double a : {1.0, 2.0, 4.0}) {
        const auto z = triangleKappaSearch(a);
        r.add("right triangle a=" + std::to_string(int(a)),
              checkNear("kappa(T_a) ~= 2 pi sqrt(1 + a^-2)", z.kappa, triangleKappa(a), tol.triangle));
    }
    for (int k = 0; k < 3; ++k) {
        const double z = 8 * kPi;
        const auto m = machinery::cosineMomentChecks([z](double t) { return std::sqrt(z - t); }, z, k);
        for (const auto& c : m.checks) r.add("Z = sqrt(8 pi - t), k=" + std::to_string(k), c);
    }
    return r;
}

VerificationReport perturbationSuite(const SuiteOptions& opt) {
    const auto& tol = tolerances();
    VerificationReport r;
    r.suite = "perturbation";
    r.provenance = provenance(r.suite, opt);
    const auto F = RadialProfile::mode(1, 1.0);
    const auto kd = perturb::kappaDerivative(F);
    const auto ld = perturb::lambda2Derivative(F);
    r.add("F = cos 2theta", checkNear("d kappa / d eps ~= -j11", kd.value, -j11(), tol.analyticDerivative));
    r.add("F = cos 2theta", checkNear("d sqrt(lambda2) / d eps ~= -j11/2", ld.dSqrtLambda2, -0.5 * j11(), tol.closedForm * 0.1));
    r.add("F = cos 2theta", checkNear("smallest eig(M) ~= -j11^2", ld.dLambda2, -j11() * j11(), 1e-9 * j11() * j11()));
    const auto fd = perturb::finiteDifferenceCheck(F, 1e-3, opt.workers);
    r.add("F = cos 2theta, eps = 1e-3", checkNear("kappa difference quotient", fd.kappaQuotient, fd.kappaPredicted, tol.fdKappa));
    r.add("F = cos 2theta, eps = 1e-3",
          checkNear("sqrt(lambda2) difference quotient", fd.sqrtLambdaQuotient, fd.sqrtLambdaPredicted, tol.fdSqrtLambda));

    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.count; ++i) {
        const auto G = perturb::randomProfile(rng);
        const std::string subject = "profile " + std::to_string(i);
        const auto p = perturb::inequalityP1(G);
        r.add(subject, checkLE("L_F <= -A |F_2|", p.lhs, p.rhs, tol.p1Margin));
        const auto k = perturb::kappaDerivative(G);
        const auto l = perturb::lambda2Derivative(G);
        r.add(subject, checkLE("d kappa < 0", k.value, 0.0, 0.0, "<"));
        r.add(subject, checkLE("d kappa < d sqrt(lambda2)", k.value, l.dSqrtLambda2, 0.0, "<"));
        r.add(subject, checkNear("mode formula ~= quadrature", k.modeFormula, k.value, 1e-8));
        const auto rot = perturb::rotateCanonical(G);
        r.add(subject, checkNear("rotated sin 2theta coefficient ~= 0", rot.rotated.sinCoeff(1), 0.0, 1e-10));
        r.add(subject, checkGE("rotated cos 2theta coefficient >= 0", rot.rotated.cosCoeff(1), 0.0, 1e-10));
    }
    return r;
}

VerificationReport counterexamplesSuite(const SuiteOptions& opt) {
    VerificationReport r;
    r.suite = "counterexamples";
    r.provenance = provenance(r.suite, opt);
    const auto z = counterex::chooseDelta(0.2);
    r.provenance.push_back({"deltaTilde", "0.2"});
    r.provenance.push_back({"delta", std::to_string(z.delta)});
    const auto pos = counterex::zetaPositivity(z);
    r.add("zeta profile", checkGE("l(gamma) > 0 on [0, j11]", pos.minimum, 0.0, 0.0, ">"));
    r.add("zeta profile", checkNear("l(0) ~= 1/2", pos.l0, 0.5, 1e-12));
    const auto s = counterex::verifySpiky(256, z, 0.0, opt.resolution, 512, opt.workers);
    Check c = checkGE("min directional FT on (0, j11] > 0", s.minimum, 0.0, 0.0, ">");
    r.add("spiky n=256 (" + std::to_string(s.directions) + " x " + std::to_string(s.radii) + ")", c);
    r.notes.push_back("spiky minimum at angle " + std::to_string(s.minAngle) + ", gamma " + std::to_string(s.minGamma) +
                      "; gap to the radial limit " + std::to_string(s.limitGap));
    for (double C : {5.0, 10.0, 20.0}) {
        const std::string subject = "interval union C=" + std::to_string(int(C));
        try {
            const auto inst = counterex::nazarovSearch(C, opt.seed);
            r.add(subject, checkGE("certified min f on [-C/n, C/n] > 0", inst.certifiedMinimum, 0.0, 0.0, ">"));
            r.add(subject, checkGE("count / n >= 1/10", double(inst.w.size()) / inst.n, 0.1));
            const auto b = counterex::intervalUnionKappa(inst);
            // κ(I) by the root search; χ̂ vanishes at 2π, so the first zero lies below
            std::vector<double> centers(inst.w.begin(), inst.w.end());
            const auto k = kappa(makeIntervalUnion(centers), {.bound = 2 * kPi * (1 + 1e-9), .steps = 64 * inst.n});
            r.add(subject, checkGE("kappa(I) vol(I) >= 2 C count / n", k.kappa.value_or(0.0) * b.volume,
                                   2 * C * inst.w.size() / inst.n));
            r.notes.push_back(subject + ": n=" + std::to_string(inst.n) + ", count=" + std::to_string(inst.w.size()) +
                              ", attempts=" + std::to_string(inst.attempts));
        } catch (const NumericalFailure& e) {
            Check f = checkGE("certified min f on [-C/n, C/n] > 0", e.residual(), 0.0, 0.0, ">");
            r.add(subject, f);
        }
    }
    return r;
}

VerificationReport runSuite(const std::string& name, const SuiteOptions& opt) {
    if (name == "tables") return tablesSuite();
    if (name == "conjectures") return conjecturesSuite(opt);
    if (name == "theorems") return theoremsSuite(opt);
    if (name == "perturbation") return perturbationSuite(opt);
    if (name == "counterexamples") return counterexamplesSuite(opt);
    throw std::invalid_argument("unknown suite \"" + name + "\"");
}

SweepRow sweepRow(const std::string& label, double parameter, const DomainSpec& spec, int resolution) {
    SweepRow row;
    row.label = label;
    row.parameter = parameter;
    auto fail = [&](const std::exception& e) { row.error += (row.error.empty() ? "" : "; ") + std::string(e.what()); };
    std::optional<SpectrumResult> dir, neu;
    try {
        const auto d = descriptors(spec);
        row.diameter = d.diameter;
        row.rMinus = d.rMinus;
        row.kappa = kappa(spec, {.resolution = resolution}).kappa;
        if (isPlanar(spec)) row.kappaBall = kappaOfEqualAreaDisk(spec);
    } catch (const std::exception& e) {
        fail(e);
    }
    try {
        dir = dirichletEigs(spec, {.count = 2});
        row.lambda1 = dir->values[0];
        row.lambda2 = dir->values[1];
        neu = neumannEigs(spec, {.count = 2});
        row.mu2 = neu->values[1];
    } catch (const std::exception& e) {
        fail(e);
    }
    if (row.kappa && row.kappaBall) {
        try {
            row.checks = kappaBoundChecks(spec, *row.kappa, 4);
            if (dir)
                for (auto& c : conjectureChecks(spec, *row.kappa, *dir)) row.checks.push_back(c);
            if (neu) row.checks.push_back(neumannCheck(*row.kappa, *neu));
        } catch (const std::exception& e) {
            fail(e);
        }
    }
    return row;
}

Table sweepTable(const std::vector<SweepRow>& rows) {
    Table t;
    t.columns = {"label", "parameter", "kappa", "kappa_ball", "lambda1", "lambda2", "mu2", "diameter", "r_minus"};
    // margin columns follow the check names of the first complete row
    std::vector<std::string> names;
    for (const auto& r : rows)
        if (r.error.empty() && !r.checks.empty()) {
            for (const auto& c : r.checks) names.push_back(c.name);
            break;
        }
    for (const auto& n : names) t.columns.push_back("margin: " + n);
    t.columns.push_back("error");
    auto opt = [](const std::optional<double>& v) { return v ? Cell(*v) : Cell(std::string()); };
    for (const auto& r : rows) {
        std::vector<Cell> row{r.label, r.parameter, opt(r.kappa), opt(r.kappaBall), opt(r.lambda1),
                              opt(r.lambda2), opt(r.mu2), r.diameter, r.rMinus};
        for (const auto& n : names) {
            const auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == n; });
            row.push_back(it == r.checks.end() ? Cell(std::string()) : Cell(it->margin));
        }
        row.push_back(r.error);
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace nullvar
