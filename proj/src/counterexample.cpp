#include "nullvar/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "nullvar/corpus.hpp"
#include "nullvar/errors.hpp"
#include "nullvar/fourier.hpp"
#include "nullvar/parallel.hpp"
#include "nullvar/special.hpp"

namespace nullvar::counterex {

namespace {

constexpr double kPi = std::numbers::pi;

struct Level {
    double r0, r1, value;
};

std::vector<Level> levels(const ZetaProfile& z) {
    return {{0.0, 1.0 - z.delta, 1.0}, {1.0 - z.delta, 1.0, 0.5}, {1.0, 1.0 + z.deltaTilde, z.a}};
}

}  // namespace

ZetaProfile buildZeta(double deltaTilde, double delta) {
    if (!(deltaTilde > 0.0 && deltaTilde < 1.0)) throw DomainError("buildZeta: deltaTilde must lie in (0, 1)");
    if (!(delta > 0.0 && delta < deltaTilde)) throw DomainError("buildZeta: delta must lie in (0, deltaTilde)");
    ZetaProfile z;
    z.deltaTilde = deltaTilde;
    z.delta = delta;
    z.a = delta * (2.0 - delta) / (2.0 * deltaTilde * (2.0 + deltaTilde));
    if (z.a > 0.5) throw DomainError("buildZeta: spike plateau a > 1/2 breaks monotonicity");
    // ∫ r ξ_δ dr = −(1/2)·δ(2−δ)/2 + a·δ̃(2+δ̃)/2
    const double moment = -0.25 * delta * (2.0 - delta) + 0.5 * z.a * deltaTilde * (2.0 + deltaTilde);
    if (std::fabs(moment) > 1e-12) throw NumericalFailure("buildZeta: zero-moment condition violated", moment);
    return z;
}

double zetaTransform(const ZetaProfile& z, double gamma) {
    double s = 0.0;
    if (gamma == 0.0) {
        for (const auto& l : levels(z)) s += l.value * 0.5 * (l.r1 * l.r1 - l.r0 * l.r0);
        return s;
    }
    // ∫ r J₀(γr) dr = r J₁(γr)/γ
    auto F = [gamma](double r) { return r * special::besselJ(1, gamma * r) / gamma; };
    for (const auto& l : levels(z)) s += l.value * (F(l.r1) - F(l.r0));
    return s;
}

double zetaTransformDerivative(const ZetaProfile& z, double gamma) {
    if (gamma == 0.0) return 0.0;
    // ∫ r² J₁(γr) dr = r² J₂(γr)/γ
    auto F = [gamma](double r) { return r * r * special::besselJ(2, gamma * r) / gamma; };
    double s = 0.0;
    for (const auto& l : levels(z)) s += l.value * (F(l.r1) - F(l.r0));
    return -s;
}

ZetaPositivity zetaPositivity(const ZetaProfile& z, double gammaMax, int gridSize) {
    if (gammaMax <= 0.0) gammaMax = special::constants::j11();
    if (gridSize < 1) throw DomainError("zetaPositivity: gridSize must be positive");
    ZetaPositivity p;
    p.l0 = zetaTransform(z, 0.0);
    p.minimum = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= gridSize; ++k) {
        const double g = gammaMax * k / gridSize;
        const double v = zetaTransform(z, g);
        if (v < p.minimum) p.minimum = v, p.atGamma = g;
        if (k > 0 && k < gridSize && !(zetaTransformDerivative(z, g) < 0.0)) p.decreasing = false;
    }
    return p;
}

ZetaProfile chooseDelta(double deltaTilde) {
    double delta = 0.25 * deltaTilde;
    for (int i = 0; i < 40; ++i, delta *= 0.5) {
        const auto z = buildZeta(deltaTilde, delta);
        if (zetaPositivity(z).positive()) return z;
    }
    throw NumericalFailure("chooseDelta: no delta with l(j11) > 0 after 40 halvings");
}

DomainSpec spikyDomain(int n, const ZetaProfile& z) {
    if (n < 8) throw InvalidDomain("spikyDomain: need n >= 8");
    return makeSpiky(n, z);  // rejects odd n
}

SpikyReport verifySpiky(int n, const ZetaProfile& z, double gammaMax, int directions, int radii, unsigned workers) {
    if (gammaMax <= 0.0) gammaMax = special::constants::j11();
    if (directions < 1 || radii < 1) throw DomainError("verifySpiky: grid sizes must be positive");
    const auto spec = spikyDomain(n, z);
    SpikyReport rep;
    rep.n = n;
    rep.directions = directions;
    rep.radii = radii;
    rep.gammaMax = gammaMax;
    std::vector<double> limit(radii + 1);
    for (int k = 1; k <= radii; ++k) limit[k] = 2.0 * kPi * zetaTransform(z, gammaMax * k / radii);
    struct Row {
        double min, gamma, gap;
    };
    std::vector<Row> rows(directions);
    parallelFor(directions, workers, [&](std::size_t i) {
        DirectionalTransform T(spec, Vec2::unit(kPi * i / directions));
        Row r{std::numeric_limits<double>::infinity(), 0.0, 0.0};
        for (int k = 1; k <= radii; ++k) {
            const double g = gammaMax * k / radii;
            const double v = T(g);
            if (v < r.min) r.min = v, r.gamma = g;
            r.gap = std::max(r.gap, std::fabs(v - limit[k]));
        }
        rows[i] = r;
    });
    rep.minimum = std::numeric_limits<double>::infinity();
    for (int i = 0; i < directions; ++i) {
        if (rows[i].min < rep.minimum) rep.minimum = rows[i].min, rep.minGamma = rows[i].gamma, rep.minAngle = kPi * i / directions;
        rep.limitGap = std::max(rep.limitGap, rows[i].gap);
    }
    return rep;
}

double nazarovF(const std::vector<int>& w, double xi) {
    double s = 0.0;
    for (int k : w) s += std::cos(k * xi);
    return s;
}

double nazarovG(int n, double x) {
    double s = 1.0;
    for (int k = 1; k <= n; ++k) {
        const double c = 1.0 - static_cast<double>(k) / n;
        s += 2.0 * c * c * std::cos(k * x);
    }
    return s;
}

NazarovInstance certify(std::vector<int> w, int n, double C, int points) {
    if (!(C > 0.0) || n < 1 || points < 1) throw DomainError("certify: need C > 0, n >= 1, points >= 1");
    NazarovInstance inst;
    inst.n = n;
    inst.C = C;
    inst.w = std::move(w);
    inst.gridStep = C / n / points;
    inst.derivativeBound = 0.0;
    for (int k : inst.w) inst.derivativeBound += k;
    const std::size_t m = inst.w.size();
    std::vector<double> c(m), s(m), rc(m), rs(m);
    for (std::size_t j = 0; j < m; ++j) {
        rc[j] = std::cos(inst.w[j] * inst.gridStep);
        rs[j] = std::sin(inst.w[j] * inst.gridStep);
    }
    double lo = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= points; ++i) {
        if (i % 512 == 0) {
            // re-anchor the phasor recurrence
            const double x = i * inst.gridStep;
            for (std::size_t j = 0; j < m; ++j) c[j] = std::cos(inst.w[j] * x), s[j] = std::sin(inst.w[j] * x);
        }
        double f = 0.0;
        for (std::size_t j = 0; j < m; ++j) f += c[j];
        lo = std::min(lo, f);
        if (lo <= 0.0) break;
        for (std::size_t j = 0; j < m; ++j) {
            const double cj = c[j];
            c[j] = cj * rc[j] - s[j] * rs[j];
            s[j] = s[j] * rc[j] + cj * rs[j];
        }
    }
    inst.gridMinimum = lo;
    inst.certifiedMinimum = lo - 0.5 * inst.gridStep * inst.derivativeBound;
    return inst;
}

NazarovInstance nazarovSearch(double C, std::uint64_t seed) {
    if (!(C > 0.0)) throw DomainError("nazarovSearch: C must be positive");
    const auto lo = static_cast<std::uint32_t>(seed), hi = static_cast<std::uint32_t>(seed >> 32);
    int attempts = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (int n = 32; n <= (1 << 20); n *= 2) {
        if (C / n >= 2.0 * kPi) continue;
        for (std::uint32_t t = 0; t < 3; ++t) {
            ++attempts;
            std::seed_seq ss{lo, hi, static_cast<std::uint32_t>(n), t};
            std::mt19937_64 rng(ss);
            std::vector<int> w;
            for (int k = 1; k <= n; ++k) {
                const double p = 1.0 - static_cast<double>(k) / n;
                if (uniform01(rng) < p * p) w.push_back(k);
            }
            if (w.empty()) continue;
            auto inst = certify(std::move(w), n, C);
            best = std::max(best, inst.certifiedMinimum);
            if (inst.certified()) {
                inst.seed = seed;
                inst.attempts = attempts;
                return inst;
            }
        }
    }
    throw NumericalFailure("nazarovSearch: no certified instance up to n = 2^20 (best certified minimum " +
                               std::to_string(best) + ")",
                           best);
}

IntervalUnionBound intervalUnionKappa(const NazarovInstance& inst) {
    if (!inst.certified()) throw DomainError("intervalUnionKappa: instance is not certified");
    IntervalUnionBound b;
    b.kappaLowerBound = inst.C / inst.n;
    // sin(ξ/2)/ξ > 0 on (0, 2π), so positivity of f carries over to χ̂
    if (b.kappaLowerBound >= 2.0 * kPi) throw DomainError("intervalUnionKappa: C/n must be below 2pi");
    b.volume = 2.0 * inst.w.size();
    b.product = b.kappaLowerBound * b.volume;
    return b;
}

double productTransform(const std::vector<int>& w, double xi1, double xi2) {
    auto one = [&](double x) {
        const double s = x == 0.0 ? 2.0 : 4.0 * std::sin(0.5 * x) / x;
        return s * nazarovF(w, x);
    };
    return one(xi1) * one(xi2);
}

}  // namespace nullvar::counterex
