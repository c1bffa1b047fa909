#include "nullvar/corpus.hpp"

#include <cmath>
#include <numbers>

#include "nullvar/errors.hpp"

namespace nullvar {

namespace {

constexpr double kPi = std::numbers::pi;

// Sutherland–Hodgman clip of a convex polygon by {x : x·u ≤ w}.
std::vector<Vec2> clip(const std::vector<Vec2>& poly, Vec2 u, double w) {
    std::vector<Vec2> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i], b = poly[(i + 1) % n];
        const double fa = dot(a, u) - w, fb = dot(b, u) - w;
        if (fa <= 0) out.push_back(a);
        if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) out.push_back(a + (b - a) * (fa / (fa - fb)));
    }
    return out;
}

double diameterOf(const std::vector<Vec2>& v) {
    double d = 0.0;
    for (const Vec2& a : v)
        for (const Vec2& b : v) d = std::max(d, (a - b).norm());
    return d;
}

}  // namespace

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

DomainSpec randomPolygon(std::mt19937_64& rng, const PolygonOptions& opt) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int k = opt.minPairs + static_cast<int>(uniform01(rng) * (opt.maxPairs - opt.minPairs + 1));
        std::vector<Vec2> poly{{-100, -100}, {100, -100}, {100, 100}, {-100, 100}};
        for (int i = 0; i < k; ++i) {
            const Vec2 u = Vec2::unit(kPi * uniform01(rng));
            const double w = 0.6 + 0.4 * uniform01(rng);
            poly = clip(poly, u, w);
            poly = clip(poly, -u, w);
        }
        if (poly.size() < 4 || poly.size() % 2) continue;
        // near-parallel strips leave corners of the initial square; the aspect test rejects those
        const double scale = 0.5 * diameterOf(poly);
        const std::size_t n = poly.size();
        for (Vec2& q : poly) q = q / scale;
        bool ok = true;
        for (std::size_t i = 0; i < n / 2; ++i) poly[i + n / 2] = -poly[i];  // exact balance
        for (std::size_t i = 0; i < n && ok; ++i) ok = (poly[(i + 1) % n] - poly[i]).norm() >= opt.minEdgeFraction * 2.0;
        if (!ok) continue;
        try {
            DomainSpec spec = makeConvexPolygon(poly);
            const auto d = descriptors(spec);
            if (d.diameter / (2.0 * d.rMinus) > opt.maxAspect) continue;
            return spec;
        } catch (const InvalidDomain&) {
            continue;
        }
    }
    throw NumericalFailure("randomPolygon: no admissible polygon in 1000 draws");
}

DomainSpec randomStar(std::mt19937_64& rng, const StarOptions& opt) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int modes = 1 + static_cast<int>(uniform01(rng) * opt.maxModes);
        RadialProfile F;
        double bound = 0.0;  // Σ (4m² + 1)(|p| + |q|): ε below 1/bound keeps the curvature positive
        for (int m = 1; m <= modes; ++m) {
            const double p = (2 * uniform01(rng) - 1) / m, q = (2 * uniform01(rng) - 1) / m;
            F.p.push_back(p);
            F.q.push_back(q);
            bound += (4.0 * m * m + 1.0) * (std::fabs(p) + std::fabs(q));
        }
        if (bound == 0.0) continue;
        const double frac = opt.convexFractionLo + (opt.convexFractionHi - opt.convexFractionLo) * uniform01(rng);
        const double eps = frac / bound;
        try {
            DomainSpec spec = makeStarShaped(F, eps, 1.0);
            if (!checkConvexBalanced(spec).convex) continue;
            return spec;
        } catch (const InvalidDomain&) {
            continue;
        }
    }
    throw NumericalFailure("randomStar: no admissible domain in 1000 draws");
}

std::vector<DomainSpec> Corpus::all() const {
    std::vector<DomainSpec> v = polygons;
    v.insert(v.end(), stars.begin(), stars.end());
    return v;
}

Corpus makeCorpus(std::uint64_t seed, int polygons, int stars) {
    Corpus c;
    c.seed = seed;
    const auto lo = static_cast<std::uint32_t>(seed), hi = static_cast<std::uint32_t>(seed >> 32);
    std::seed_seq sp{lo, hi, 1u}, ss{lo, hi, 2u};
    std::mt19937_64 rp(sp), rs(ss);
    for (int i = 0; i < polygons; ++i) c.polygons.push_back(randomPolygon(rp));
    for (int i = 0; i < stars; ++i) c.stars.push_back(randomStar(rs));
    return c;
}

}  // namespace nullvar
