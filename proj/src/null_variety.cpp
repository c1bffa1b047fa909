#include "nullvar/null_variety.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "nullvar/errors.hpp"
#include "nullvar/parallel.hpp"
#include "nullvar/special.hpp"

namespace nullvar {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDipTolerance = 1e-8;  // relative to vol

bool isConvexSpec(const DomainSpec& spec) { return checkConvexBalanced(spec).convex; }

template <class F>
double bracketRoot(F&& f, double a, double b, double fa, double fb) {
    boost::uintmax_t iters = 200;
    auto tol = [](double lo, double hi) { return std::fabs(hi - lo) <= 4e-16 * std::max(1.0, std::fabs(hi)); };
    const auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
    return 0.5 * (r.first + r.second);
}

// Brent locates a minimum only to ~sqrt(eps); a tangential zero is sharpened
// as the zero of the central-difference derivative.
double polishTangential(const DirectionalTransform& T, double m, double lo, double hi) {
    const double h = 1e-5 * std::max(1.0, m);
    auto d = [&](double r) { return T(r + h) - T(r - h); };
    const double delta = 1e-6 * std::max(1.0, m);
    const double a = std::max(lo, m - delta);
    const double b = std::min(hi, m + delta);
    const double da = d(a);
    const double db = d(b);
    if ((da < 0) == (db < 0)) return m;
    return bracketRoot(d, a, b, da, db);
}

struct Found {
    double value;
    bool tangential;
};

// Lazy scan of (0, bound + 2h] for roots with multiplicity; stops after maxCount.
std::vector<Found> scanRoots(const DirectionalTransform& T, double bound, int steps, int maxCount) {
    std::vector<Found> out;
    if (!(bound > 0.0) || steps < 2) throw DomainError("root search needs a positive bound and >= 2 steps");
    const double h = bound / steps;
    const int last = steps + 2;
    const double vol = T.volume();
    const double limit = bound + 1e-8 * std::max(1.0, bound);
    auto full = [&](double r) { return T(r); };

    std::vector<double> t(last + 1), f(last + 1);
    auto sample = [&](int i) {
        t[i] = i * h;
        f[i] = i == 0 ? vol : T.scan(t[i]);
        if (f[i] == 0.0) {  // step off an exact zero so that sign tests stay strict
            t[i] += 1e-9 * h;
            f[i] = T.scan(t[i]);
        }
    };
    sample(0);
    sample(1);
    auto push = [&](double v, bool tang) {
        if (v <= limit && int(out.size()) < maxCount) out.push_back({v, tang});
    };
    for (int i = 1; i <= last && int(out.size()) < maxCount; ++i) {
        if (i + 1 <= last) sample(i + 1);
        if ((f[i - 1] < 0) != (f[i] < 0)) {
            const double fa = full(t[i - 1]);
            const double fb = full(t[i]);
            if ((fa < 0) != (fb < 0)) push(bracketRoot(full, t[i - 1], t[i], fa, fb), false);
            else push(bracketRoot([&](double r) { return T.scan(r); }, t[i - 1], t[i], f[i - 1], f[i]), false);
            if (t[i - 1] > limit) break;
            continue;
        }
        if (i + 1 > last) break;
        if (t[i - 1] > limit) break;
        const bool noChangeNext = (f[i] < 0) == (f[i + 1] < 0);
        if (noChangeNext && std::fabs(f[i]) <= std::fabs(f[i - 1]) && std::fabs(f[i]) <= std::fabs(f[i + 1])) {
            const double s = f[i] < 0 ? -1.0 : 1.0;
            const auto m = boost::math::tools::brent_find_minima([&](double r) { return s * full(r); }, t[i - 1],
                                                                 t[i + 1], 52);
            if (m.second < 0.0) {
                // two simple roots inside the cell pair
                const double fa = full(t[i - 1]);
                const double fb = full(t[i + 1]);
                const double fm = full(m.first);
                if ((fa < 0) != (fm < 0)) push(bracketRoot(full, t[i - 1], m.first, fa, fm), false);
                if ((fm < 0) != (fb < 0)) push(bracketRoot(full, m.first, t[i + 1], fm, fb), false);
            } else if (m.second <= kDipTolerance * vol) {
                const double z = polishTangential(T, m.first, t[i - 1], t[i + 1]);
                push(z, true);
                push(z, true);
            }
        }
    }
    return out;
}

double defaultBound(bool convex, double w) {
    return (convex ? 2.0 : 8.0) * kPi / w;
}

// Minimizes a function of the angle on [a, b] by golden-section search.
template <class F>
std::pair<double, double> goldenSection(F&& f, double a, double b, double tol) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    return fc <= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

}  // namespace

RootResult firstRoot(const DirectionalTransform& T, double bound, int steps) {
    RootResult r;
    r.bound = bound;
    const auto roots = scanRoots(T, bound, steps, 1);
    if (!roots.empty()) {
        r.found = true;
        r.value = roots.front().value;
        r.tangential = roots.front().tangential;
    }
    return r;
}

RootResult firstRoot(const DomainSpec& spec, Vec2 e, RootOptions opt) {
    const bool convex = isConvexSpec(spec);
    DirectionalTransform T(spec, e);
    const double bound = opt.bound > 0.0 ? opt.bound : defaultBound(convex, T.halfBreadth());
    const int steps = opt.steps > 0 ? opt.steps : (convex ? 128 : 2048);
    return firstRoot(T, bound, steps);
}

std::vector<double> directionalRoots(const DirectionalTransform& T, double bound, int steps, int maxCount) {
    std::vector<double> out;
    for (const auto& f : scanRoots(T, bound, steps, maxCount)) out.push_back(f.value);
    return out;
}

NullVarietyResult kappa(const DomainSpec& spec, const KappaOptions& opt) {
    validate(spec);
    NullVarietyResult res;
    if (const auto* b = std::get_if<shape::Ball>(&spec)) {
        res.kappa = special::besselZero(special::BesselOrder::fromTwice(b->dim), 1) / b->radius;
        res.closedForm = true;
        return res;
    }
    if (const auto* r = std::get_if<shape::Rectangle>(&spec)) {
        const auto it = std::max_element(r->halfSides.begin(), r->halfSides.end());
        res.kappa = kPi / *it;
        res.argminAngle = (it - r->halfSides.begin()) == 1 ? kPi / 2 : 0.0;
        res.closedForm = true;
        return res;
    }
    if (std::holds_alternative<shape::RevolutionBody>(spec))
        throw UnsupportedDomain("kappa is not computed for bodies of revolution (only the axis transform is)");

    const bool convex = isConvexSpec(spec);
    const int steps = opt.steps > 0 ? opt.steps : (convex ? 128 : 2048);
    const bool oneDim = std::holds_alternative<shape::IntervalUnion>(spec);
    const int nDir = oneDim ? 1 : std::max(1, opt.resolution);

    auto kappa1 = [&](double angle, double* boundUsed) {
        DirectionalTransform T(spec, Vec2::unit(angle));
        const double bound = opt.bound > 0.0 ? opt.bound : defaultBound(convex, T.halfBreadth());
        if (boundUsed) *boundUsed = bound;
        const auto r = firstRoot(T, bound, steps);
        return r.found ? r.value : kInf;
    };

    std::vector<double> values(nDir), bounds(nDir);
    parallelFor(nDir, opt.workers, [&](std::size_t i) { values[i] = kappa1(kPi * i / nDir, &bounds[i]); });
    res.searchBound = *std::max_element(bounds.begin(), bounds.end());
    for (int i = 0; i < nDir; ++i) res.perDirection.emplace_back(kPi * i / nDir, values[i]);

    const auto best = std::min_element(values.begin(), values.end());
    if (*best == kInf) return res;
    double kap = *best;
    double arg = kPi * (best - values.begin()) / nDir;
    if (opt.refine && nDir > 2) {
        const double h = kPi / nDir;
        const auto g = goldenSection([&](double a) { return kappa1(a, nullptr); }, arg - h, arg + h, 1e-6);
        if (g.second < kap) {
            kap = g.second;
            arg = g.first;
        }
    }
    res.kappa = kap;
    res.argminAngle = std::fmod(arg + kPi, kPi);
    return res;
}

NullCurve nullCurve(const DomainSpec& spec, int resolution, unsigned workers) {
    if (!isPlanar(spec) || !isConvexSpec(spec))
        throw UnsupportedDomain("the null curve is sampled for convex balanced planar domains");
    NullCurve out;
    std::vector<double> values(resolution);
    parallelFor(resolution, workers, [&](std::size_t i) {
        const auto r = firstRoot(spec, Vec2::unit(kPi * i / resolution));
        if (!r.found) throw NumericalFailure("no root below 2π/w(e) for a convex domain");
        values[i] = r.value;
    });
    for (int i = 0; i < resolution; ++i) out.points.emplace_back(kPi * i / resolution, values[i]);
    out.maxKappa1 = *std::max_element(values.begin(), values.end());
    out.minKappa1 = *std::min_element(values.begin(), values.end());
    return out;
}

double triangleKappa(double a) {
    if (!(a > 0.0)) throw DomainError("triangle leg must be positive");
    return 2.0 * kPi * std::sqrt(1.0 + 1.0 / (a * a));
}

TriangleZero triangleKappaSearch(double a) {
    if (!(a > 0.0)) throw DomainError("triangle leg must be positive");
    const std::vector<Vec2> tri{{0, 0}, {1, 0}, {0, a}};
    const double area = 0.5 * a;
    auto F = [&](Vec2 xi) { return ftPolygonComplex(tri, xi); };

    constexpr int nA = 720;
    constexpr int nR = 400;
    const double rMax = 2.0 * kPi * (1.0 + 1.0 / a) + 2.0 * kPi;
    // χ̂(−ξ) = conj χ̂(ξ): the half-plane of angles [0, π) holds a copy of every zero
    std::vector<double> g(nA * nR);
    auto pt = [&](int i, int k) { return Vec2::polar(rMax * (k + 0.5) / nR, kPi * i / nA); };
    for (int i = 0; i < nA; ++i)
        for (int k = 0; k < nR; ++k) g[i * nR + k] = std::norm(F(pt(i, k)));

    TriangleZero best{std::numeric_limits<double>::infinity(), {}, 0.0};
    for (int i = 1; i + 1 < nA; ++i) {
        for (int k = 1; k + 1 < nR; ++k) {
            const double v = g[i * nR + k];
            bool isMin = true;
            for (int di = -1; di <= 1 && isMin; ++di)
                for (int dk = -1; dk <= 1; ++dk)
                    if ((di || dk) && g[(i + di) * nR + k + dk] < v) {
                        isMin = false;
                        break;
                    }
            if (!isMin) continue;
            Vec2 xi = pt(i, k);
            // Newton on (Re, Im) with a forward-difference Jacobian
            for (int it = 0; it < 60; ++it) {
                const auto f0 = F(xi);
                if (std::abs(f0) < 1e-14 * area) break;
                const double hstep = 1e-7 * (1.0 + xi.norm());
                const auto fx = (F({xi.x + hstep, xi.y}) - f0) / hstep;
                const auto fy = (F({xi.x, xi.y + hstep}) - f0) / hstep;
                const double det = fx.real() * fy.imag() - fy.real() * fx.imag();
                if (det == 0.0) break;
                const double dx = (f0.real() * fy.imag() - fy.real() * f0.imag()) / det;
                const double dy = (fx.real() * f0.imag() - f0.real() * fx.imag()) / det;
                xi = {xi.x - dx, xi.y - dy};
                if (xi.norm() > 2.0 * rMax) break;
            }
            const double res = std::abs(F(xi));
            if (res <= 1e-10 * area && xi.norm() > 1e-6 && xi.norm() < best.kappa) best = {xi.norm(), xi, res};
        }
    }
    if (!std::isfinite(best.kappa)) throw NumericalFailure("no zero of the triangle transform located");
    return best;
}

}  // namespace nullvar
