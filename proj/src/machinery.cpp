#include "nullvar/machinery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "nullvar/corpus.hpp"
#include "nullvar/errors.hpp"
#include "nullvar/fourier.hpp"
#include "nullvar/null_variety.hpp"
#include "nullvar/quadrature.hpp"
#include "nullvar/special.hpp"

namespace nullvar::machinery {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double tau() { return 2.0 * special::constants::j01(); }
double tau2() { return tau() * tau(); }
double j11() { return special::constants::j11(); }
double j03() { return special::constants::j03(); }

double J1(double x) { return special::besselJ(1, x); }

// ∫₀^{j₀₃} α_approx J₁ piece by piece from the antiderivatives 1 − J₀,
// (πx/2)(J₁H₀ − J₀H₁) and x²J₂.
double keyClosedForm(double y) {
    const double s = tau2() / 8.0;
    const double c = slopeC(y);
    const double d = 1.0 - kTwoPi * c;
    const auto ms = special::besselMoments(s);
    const auto m11 = special::besselMoments(j11());
    const auto m2pi = special::besselMoments(kTwoPi);
    const auto m03 = special::besselMoments(j03());
    const double inner = ms.I2 / tau2();
    const double flat = y * (m11.I0 - ms.I0);
    const double chord = c * (m2pi.I1 - m11.I1) + d * (m2pi.I0 - m11.I0);
    const double outer = m03.I0 - m2pi.I0;
    return inner + flat + chord + outer;
}

double alphaApproxUnchecked(double r, double y) {
    if (r <= tau2() / 8.0) return r * r / tau2();
    if (r <= j11()) return y;
    if (r <= kTwoPi) {
        const double c = slopeC(y);
        return c * r + 1.0 - kTwoPi * c;
    }
    return 1.0;
}

ProofConstants computeConstants() {
    ProofConstants k;
    k.tau = tau();
    k.yMin = yMinBound(tau2() / 8.0);
    k.M = keyClosedForm(0.0);
    k.L = keyClosedForm(1.0) - k.M;
    k.finalEstimate = k.L * k.yMin + k.M;
    const double root = std::sqrt(4.0 * kPi * kPi - tau2());
    k.tableHorizontal = {
        {"2pi - sqrt(4pi^2 - tau^2)", kTwoPi - root, 2.240206980},
        {"tau^2/8 = j01^2/2", tau2() / 8.0, 2.891592982},
        {"j11", j11(), 3.831705970},
        {"tau = 2 j01", k.tau, 4.809651116},
        {"2pi", kTwoPi, 6.283185308},
        {"j12", special::constants::j12(), 7.015586670},
        {"j03", j03(), 8.653727913},
        {"2pi + sqrt(4pi^2 - tau^2)", kTwoPi + root, 10.326163640},
    };
    // The published "c(j11^2/tau^2)" entry evaluates (τ² − j₁₁)/(τ²(2π − j₁₁)).
    k.tableVertical = {
        {"L", k.L, -0.0852948043},
        {"yMin L + M", k.finalEstimate, -0.0072444612},
        {"M", k.M, 0.0386824043},
        {"c(j11^2/tau^2)", (tau2() - j11()) / (tau2() * (kTwoPi - j11())), 0.3403496255},
        {"yMin", k.yMin, 0.5384485717},
        {"j11^2/tau^2", j11() * j11() / tau2(), 0.6346834915},
    };
    return k;
}

}  // namespace

const ProofConstants& constants() {
    static const ProofConstants k = computeConstants();
    return k;
}

double chordSlope(double r) { return (tau2() - r * r) / (tau2() * (kTwoPi - r)); }

double slopeC(double y11) { return (1.0 - y11) / (kTwoPi - j11()); }

double alphaApprox(double r, double y11) {
    if (!(r >= 0.0 && r <= j03())) throw DomainError("alphaApprox: r outside [0, j03]");
    return alphaApproxUnchecked(r, y11);
}

double keyIntegral(double y11) {
    if (!(y11 >= 0.0 && y11 <= 1.0)) throw DomainError("keyIntegral: y11 outside [0, 1]");
    const auto& k = constants();
    return k.L * y11 + k.M;
}

double keyIntegralQuadrature(double y11) {
    auto f = [y11](double r) { return alphaApproxUnchecked(r, y11) * J1(r); };
    return quad::adaptivePanels(f, {0.0, tau2() / 8.0, j11(), kTwoPi, j03()}, 1e-14);
}

double yMinBound(double rMinus) {
    const double lo = tau2() / 8.0;
    if (!(rMinus >= lo * (1 - 1e-15) && rMinus <= j11() * (1 + 1e-15)))
        throw DomainError("yMinBound: rMinus outside [tau^2/8, j11]");
    return 1.0 - (kTwoPi - j11()) * chordSlope(rMinus);
}

double r2AboveChordMargin(int samples) {
    const double y = j11() * j11() / tau2();
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= samples; ++i) {
        const double r = j11() + (kTwoPi - j11()) * i / samples;
        m = std::min(m, r * r / tau2() - alphaApproxUnchecked(r, y));
    }
    return m;
}

// ---------------------------------------------------------------- class A

double ClassAFunction::operator()(double r) const {
    if (r <= rMinus) return r * r / tau2();
    if (r >= rPlus) return 1.0;
    double v = std::numeric_limits<double>::infinity();
    for (auto [s, b] : lines) v = std::min(v, s * r + b);
    return v;
}

std::vector<double> ClassAFunction::knots() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const double ds = lines[i].first - lines[j].first;
            if (std::fabs(ds) < 1e-15) continue;
            const double x = (lines[j].second - lines[i].second) / ds;
            if (!(x > rMinus && x < rPlus)) continue;
            const double yi = lines[i].first * x + lines[i].second;
            if (yi <= (*this)(x) + 1e-13) out.push_back(x);
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return b - a < 1e-13; }), out.end());
    return out;
}

std::vector<Check> ClassAFunction::validate() const {
    std::vector<Check> out;
    const double t = tau();
    const int n = 2000;
    const double top = j03();
    double minVal = 1.0, minStep = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double r0 = top * i / n;
        minVal = std::min(minVal, (*this)(r0));
        if (i < n) minStep = std::min(minStep, (*this)(top * (i + 1) / n) - (*this)(r0));
    }
    out.push_back(checkGE("(a) non-negative", minVal, 0.0));
    out.push_back(checkGE("(a) non-decreasing", minStep, 0.0, 1e-14));
    double lineMin = std::numeric_limits<double>::infinity();
    for (auto [s, b] : lines) lineMin = std::min(lineMin, s * rMinus + b);
    out.push_back(checkNear("(b) continuity at rMinus", lineMin, rMinus * rMinus / tau2(), 1e-12));
    lineMin = std::numeric_limits<double>::infinity();
    for (auto [s, b] : lines) lineMin = std::min(lineMin, s * rPlus + b);
    out.push_back(checkNear("(c) continuity at rPlus", lineMin, 1.0, 1e-12));
    double worst = 0.0;
    const double h = (rPlus - rMinus) / n;
    for (int i = 1; i < n; ++i) {
        const double r = rMinus + h * i;
        worst = std::max(worst, (*this)(r - h) - 2 * (*this)(r) + (*this)(r + h));
    }
    out.push_back(checkLE("(d) concave on [rMinus, rPlus]", worst, 0.0, 1e-12));
    out.push_back(checkGE("(e) rMinus > tau^2/8", rMinus, tau2() / 8.0));
    out.push_back(checkLE("(e) rMinus <= tau", rMinus, t));
    out.push_back(checkLE("(e) tau <= rPlus", t, rPlus));
    out.push_back(checkLE("(e) rPlus < 2pi", rPlus, kTwoPi));
    return out;
}

ClassAFunction randomClassA(std::mt19937_64& rng, int maxInteriorLines) {
    auto u = [](std::mt19937_64& g) { return uniform01(g); };
    ClassAFunction f;
    const double lo = tau2() / 8.0, t = tau();
    f.rMinus = lo + (t - lo) * (0.001 + 0.999 * u(rng));
    f.rPlus = t + (kTwoPi - t) * 0.999 * u(rng);
    const double ay = f.rMinus * f.rMinus / tau2();
    const double chord = (1.0 - ay) / (f.rPlus - f.rMinus);
    // pinned lines through both endpoints keep the envelope continuous there
    const double sA = chord * (1.0 + 3.0 * u(rng));
    const double sB = chord * u(rng);
    f.lines.push_back({sA, ay - sA * f.rMinus});
    f.lines.push_back({sB, 1.0 - sB * f.rPlus});
    const int m = std::min(maxInteriorLines, static_cast<int>(u(rng) * (maxInteriorLines + 1)));
    for (int i = 0; i < m; ++i) {
        const double x = f.rMinus + (f.rPlus - f.rMinus) * (0.02 + 0.96 * u(rng));
        const double lower = ay + chord * (x - f.rMinus);
        const double upper = std::min(sA * x + f.lines[0].second, sB * x + f.lines[1].second);
        const double y = lower + (upper - lower) * u(rng);
        // slopes keeping the line above both endpoints
        const double smax = (y - ay) / (x - f.rMinus);
        const double smin = std::max(0.0, (1.0 - y) / (f.rPlus - x));
        if (smax < smin) continue;
        const double s = smin + (smax - smin) * u(rng);
        f.lines.push_back({s, y - s * x});
    }
    return f;
}

double classAIntegral(const ClassAFunction& a) {
    std::vector<double> breaks{0.0, a.rMinus, a.rPlus, tau2() / 8.0, j11(), kTwoPi, j03()};
    for (double k : a.knots()) breaks.push_back(k);
    auto f = [&](double r) { return a(r) * J1(r); };
    return quad::panels<20>(f, breaks, 4);
}

// ---------------------------------------------------------- cosine moments

bool CosineMoments::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.applicable || c.pass; });
}

CosineMoments cosineMomentChecks(const std::function<double(double)>& Z, double z, int k) {
    if (!(z > 0.0) || k < 0) throw DomainError("cosineMomentChecks: need z > 0 and k >= 0");
    CosineMoments out;
    const int n = 4000;
    double scale = 0.0;
    std::vector<double> v(n + 1);
    for (int i = 0; i <= n; ++i) {
        v[i] = Z(z * i / n);
        scale = std::max(scale, std::fabs(v[i]));
    }
    const double tol = 1e-10 * std::max(scale, 1.0);
    for (int i = 0; i < n && out.preconditionHolds; ++i)
        if (v[i + 1] > v[i] + tol) out.preconditionHolds = false, out.precondition = "Z is not non-increasing";
    for (int i = 1; i < n && out.preconditionHolds; ++i)
        if (v[i - 1] - 2 * v[i] + v[i + 1] > 1e-8 * std::max(scale, 1.0))
            out.preconditionHolds = false, out.precondition = "Z is not concave";

    const double p = kTwoPi;
    const double a[4] = {p * k, p * (k + 0.5), p * k, p * (k + 0.5)};
    const double b[4] = {p * (k + 1), p * (k + 1.5), p * (k + 0.5), p * (k + 1)};
    const char* names[4] = {"int_[2pi k, 2pi(k+1)] Z cos <= 0", "int_[2pi(k+1/2), 2pi(k+3/2)] Z cos >= 0",
                            "int_[2pi k, 2pi(k+1/2)] Z cos >= 0", "int_[2pi(k+1/2), 2pi(k+1)] Z cos <= 0"};
    const bool upper[4] = {true, false, false, true};
    auto f = [&](double t) { return Z(t) * std::cos(t); };
    for (int i = 0; i < 4; ++i) {
        const bool inside = b[i] <= z * (1 + 1e-15);
        // breaks at the zeros of cos keep each panel sign-definite
        std::vector<double> br{a[i], b[i]};
        for (double q = a[i] + p / 4; q < b[i]; q += p / 4) br.push_back(q);
        out.integrals[i] = inside ? quad::adaptivePanels(f, br, 1e-13) : 0.0;
        Check c = upper[i] ? checkLE(names[i], out.integrals[i], 0.0, 1e-10) : checkGE(names[i], out.integrals[i], 0.0, 1e-10);
        out.checks.push_back(inside && out.preconditionHolds ? c : notApplicable(c));
    }
    return out;
}

std::vector<Check> cuboidInequality(int dMax) {
    if (dMax < 1 || dMax > 2 * special::kMaxOrder) throw DomainError("cuboidInequality: dMax out of range");
    std::vector<Check> out;
    for (int d = 1; d <= dMax; ++d) {
        const double lhs = special::besselZero(special::BesselOrder::fromTwice(d), 1);
        const double rhs = 2.0 * std::sqrt(kPi) * std::pow(boost::math::tgamma(1.0 + 0.5 * d), 1.0 / d);
        // d = 1 is the equality j_{1/2,1} = π
        out.push_back(checkGE("d = " + std::to_string(d), lhs, rhs, 1e-13 * rhs));
    }
    return out;
}

// --------------------------------------------------------------- pipeline

bool PipelineReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.applicable || c.pass; });
}

PipelineReport proofPipeline(const DomainSpec& spec, unsigned workers) {
    if (!isPlanar(spec) || !isPlanarStar(spec)) throw DomainError("proofPipeline: planar convex balanced domains only");
    const auto cb = checkConvexBalanced(spec);
    if (!cb.convex || !cb.balanced) throw DomainError("proofPipeline: domain is not convex and balanced");

    PipelineReport rep;
    const double target = kPi * tau2();
    rep.scale = std::sqrt(target / volume(spec));
    const DomainSpec norm = scaled(spec, rep.scale);
    const auto g = descriptors(norm);
    rep.diameter = g.diameter;
    rep.rMinus = g.rMinus;
    rep.rPlus = g.rPlus;

    KappaOptions ko;
    ko.workers = workers;
    const auto kv = kappa(norm, ko);
    if (!kv.kappa) throw NumericalFailure("proofPipeline: no real zero found for kappa");
    rep.kappa = *kv.kappa;
    const double kTol = 1e-8;

    if (g.diameter >= 4.0 * kPi || g.rMinus <= tau2() / 8.0) {
        const bool small = g.diameter < 4.0 * kPi;
        rep.branch = small ? "small-inradius" : "diameter";
        rep.note = "outside class-A hypotheses";
        if (small) rep.checks.push_back(checkLE("vol <= 2 rMinus D", target, 2 * g.rMinus * g.diameter, 1e-9 * target));
        rep.checks.push_back(checkLE("kappa <= 4pi/D", rep.kappa, 4.0 * kPi / g.diameter, kTol));
        rep.checks.push_back(checkLE("4pi/D <= 1", 4.0 * kPi / g.diameter, 1.0));
        rep.checks.push_back(checkLE("kappa <= 1", rep.kappa, 1.0, kTol));
        return rep;
    }

    rep.branch = "class-A";
    auto alpha = [&](double r) { return ringFunctions(norm, r).alpha; };
    const double top = j03();
    std::vector<double> breaks = ringBreakpoints(norm);
    std::erase_if(breaks, [&](double r) { return r <= 0.0 || r >= top; });
    for (double r : {0.0, g.rMinus, g.rPlus, tau2() / 8.0, j11(), kTwoPi, top}) breaks.push_back(r);
    std::sort(breaks.begin(), breaks.end());

    // (b), (c), (e)
    double bDev = 0.0;
    for (int i = 1; i <= 64; ++i) {
        const double r = g.rMinus * i / 64.0;
        bDev = std::max(bDev, std::fabs(alpha(r) - r * r / tau2()));
    }
    rep.checks.push_back(checkLE("(b) alpha = r^2/tau^2 on [0, rMinus]", bDev, 0.0, 1e-10));
    rep.checks.push_back(checkNear("(c) alpha(rPlus) = 1", alpha(g.rPlus), 1.0, 1e-10));
    rep.checks.push_back(checkLE("(e) rMinus <= tau", g.rMinus, tau(), 1e-10));
    rep.checks.push_back(checkLE("(e) tau <= rPlus", tau(), g.rPlus, 1e-10));
    rep.checks.push_back(checkLE("(e) rPlus < 2pi", g.rPlus, kTwoPi));

    // (a), (d) on a grid refined at the breakpoints
    std::vector<double> grid;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        for (int k = 0; k < 24; ++k) grid.push_back(breaks[i] + (breaks[i + 1] - breaks[i]) * k / 24.0);
    grid.push_back(top);
    std::vector<double> av(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) av[i] = alpha(grid[i]);
    double minStep = 0.0, concave = -std::numeric_limits<double>::infinity();
    double prevSlope = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double h = grid[i + 1] - grid[i];
        if (h <= 0.0) continue;
        minStep = std::min(minStep, av[i + 1] - av[i]);
        if (grid[i] >= g.rMinus && grid[i + 1] <= g.rPlus) {
            const double s = (av[i + 1] - av[i]) / h;
            if (std::isfinite(prevSlope)) concave = std::max(concave, s - prevSlope);
            prevSlope = s;
        }
    }
    rep.checks.push_back(checkGE("(a) alpha non-decreasing", minStep, 0.0, 1e-12));
    if (std::isfinite(concave)) rep.checks.push_back(checkLE("(d) alpha concave on [rMinus, rPlus]", concave, 0.0, 1e-8));

    // y₁₁ and the dominance by α_approx
    rep.y11 = alpha(j11());
    if (g.rMinus <= j11()) {
        const double yb = yMinBound(g.rMinus);
        rep.checks.push_back(checkGE("y11 >= 1 - (2pi - j11) a(rMinus)", rep.y11, yb, 1e-10));
    } else {
        rep.checks.push_back(checkNear("y11 = j11^2/tau^2", rep.y11, j11() * j11() / tau2(), 1e-10));
    }
    rep.checks.push_back(checkGE("y11 >= yMin", rep.y11, constants().yMin, 1e-10));
    double below = std::numeric_limits<double>::infinity(), above = below;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid[i];
        const double ap = alphaApproxUnchecked(r, rep.y11);
        if (r <= j11()) below = std::min(below, ap - av[i]);
        if (r >= j11() && r <= kTwoPi) above = std::min(above, av[i] - ap);
    }
    rep.checks.push_back(checkGE("alpha <= alpha_approx on [0, j11]", below, 0.0, 1e-10));
    rep.checks.push_back(checkGE("alpha >= alpha_approx on [j11, 2pi]", above, 0.0, 1e-10));

    // the integral chain
    rep.integral = quad::panels<20>([&](double r) { return alpha(r) * J1(r); }, breaks, 4);
    rep.keyBound = keyIntegral(std::clamp(rep.y11, 0.0, 1.0));
    rep.checks.push_back(checkLE("int alpha J1 <= L y11 + M", rep.integral, rep.keyBound, 1e-9));
    rep.checks.push_back(checkLE("L y11 + M <= L yMin + M", rep.keyBound, constants().finalEstimate, 1e-12));
    rep.checks.push_back(checkLE("L yMin + M < 0", constants().finalEstimate, 0.0, 0.0, "<"));
    rep.averagedJ0 = averagedBessel(norm).direct;
    rep.checks.push_back(checkNear("int_Omega J0 = vol int alpha J1", rep.averagedJ0, target * rep.integral, 1e-8 * target));
    rep.checks.push_back(checkLE("int_Omega J0(|x|) dx <= 0", rep.averagedJ0, 0.0));
    rep.checks.push_back(checkLE("kappa <= 1", rep.kappa, 1.0, kTol));
    return rep;
}

}  // namespace nullvar::machinery
