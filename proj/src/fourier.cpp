#include "nullvar/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nullvar/errors.hpp"
#include "nullvar/quadrature.hpp"
#include "nullvar/special.hpp"

namespace nullvar {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kStarNodes = 4096;

double sinc(double x) {
    if (std::fabs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Chord length of a convex polygon on the line x·e = t.
double clipChord(const std::vector<Vec2>& v, Vec2 e, double t) {
    const Vec2 p = perp(e);
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Vec2 d = v[(i + 1) % v.size()] - v[i];
        const double c0 = cross(d, e * t - v[i]);
        const double cd = cross(d, p);
        if (cd > 0) lo = std::max(lo, -c0 / cd);
        else if (cd < 0) hi = std::min(hi, -c0 / cd);
        else if (c0 < 0) return 0.0;
    }
    return std::max(0.0, hi - lo);
}

// ∫_{t0}^{t1} cos(ρt)(A + Bt) dt
double cosLinear(double rho, double t0, double t1, double A, double B) {
    if (rho * (t1 - t0) < 0.5) {
        return quad::gauss<20>([&](double t) { return std::cos(rho * t) * (A + B * t); }, t0, t1);
    }
    auto F = [&](double t) {
        const double s = std::sin(rho * t);
        const double c = std::cos(rho * t);
        return A * s / rho + B * (t * s / rho + c / (rho * rho));
    };
    return F(t1) - F(t0);
}

double revolutionGeneral(double alpha, double xi1, double k) {
    // 2∫₀¹ cos(ξ₁t)·χ̂_disk(a(t), k) dt with a(t) = (1 − t)/α
    auto f = [&](double t) {
        const double a = (1.0 - t) / alpha;
        return std::cos(xi1 * t) * ftBall(2, a, k);
    };
    const int sub = 4 + static_cast<int>(std::ceil((std::fabs(xi1) + k / alpha) / 4.0));
    return 2.0 * quad::panels<20>(f, {0.0, 1.0}, sub);
}

}  // namespace

double radialCosineIntegral(double c, double R) {
    const double x = c * R;
    if (std::fabs(x) < 1e-4) {
        // Σ (−1)^k x^{2k} / ((2k)!(2k+2)), six terms
        const double x2 = x * x;
        const double s =
            0.5 - x2 * (1.0 / 8 - x2 * (1.0 / 144 - x2 * (1.0 / 5760 - x2 * (1.0 / 403200 - x2 / 43545600.0))));
        return R * R * s;
    }
    // R²(sinc x − ½ sinc²(x/2)) avoids the 1/c² cancellation of the textbook form
    const double h = sinc(0.5 * x);
    return R * R * (std::sin(x) / x - 0.5 * h * h);
}

double ftBall(int dim, double radius, double rho) {
    if (dim < 1 || dim > 2 * special::kMaxOrder) throw DomainError("ball dimension outside supported range");
    if (!(radius > 0.0)) throw DomainError("ball radius must be positive");
    rho = std::fabs(rho);
    const double nu = 0.5 * dim;
    const double vol = std::pow(kPi, nu) / std::tgamma(nu + 1) * std::pow(radius, dim);
    const double x = radius * rho;
    if (x < 1e-4) {
        const double x2 = x * x;
        return vol * (1.0 - x2 / (4 * (nu + 1)) + x2 * x2 / (32 * (nu + 1) * (nu + 2)));
    }
    return std::pow(kTwoPi, nu) * std::pow(radius, dim) * special::besselJ(special::BesselOrder::fromTwice(dim), x) /
           std::pow(x, nu);
}

double ftRectangle(const std::vector<double>& halfSides, const std::vector<double>& xi) {
    if (halfSides.size() != xi.size()) throw DomainError("wavevector dimension does not match the box");
    double v = 1.0;
    for (std::size_t j = 0; j < xi.size(); ++j) {
        const double a = 2.0 * halfSides[j];
        v *= a * sinc(0.5 * xi[j] * a);
    }
    return v;
}

double ftRevolutionAxis(double alpha, double xi1) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    const double x = std::fabs(xi1);
    double g;  // (ξ − sin ξ)/ξ³
    if (x < 1e-2) {
        const double x2 = x * x;
        g = 1.0 / 6 - x2 * (1.0 / 120 - x2 * (1.0 / 5040 - x2 / 362880.0));
    } else {
        g = (x - std::sin(x)) / (x * x * x);
    }
    return 4.0 * kPi / (alpha * alpha) * g;
}

std::complex<double> ftPolygonComplex(const std::vector<Vec2>& v, Vec2 xi) {
    const std::size_t n = v.size();
    if (n < 3) throw DomainError("polygon needs at least three vertices");
    const double k2 = dot(xi, xi);
    if (k2 == 0.0) {
        double a = 0.0;
        for (std::size_t i = 0; i < n; ++i) a += cross(v[i], v[(i + 1) % n]);
        return 0.5 * a;
    }
    std::complex<double> sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = v[i];
        const Vec2 b = v[(i + 1) % n];
        const Vec2 d = b - a;
        const Vec2 m = (a + b) * 0.5;
        // (ξ·n)|e| with outward normal n = (d.y, −d.x)/|d|
        const double flux = xi.x * d.y - xi.y * d.x;
        sum += flux * std::polar(1.0, -dot(xi, m)) * sinc(0.5 * dot(xi, d));
    }
    return std::complex<double>(0.0, 1.0) / k2 * sum;
}

// --- directional transform --------------------------------------------------

struct DirectionalTransform::Impl {
    enum class Kind { Ball, Rectangle, Polygon, Star, Spiky, Intervals, Revolution } kind;
    DomainSpec spec;
    Vec2 e;
    double w = 0.0;
    double vol = 0.0;

    // polygon: chord breakpoints and the linear chord A + Bt on each segment
    std::vector<double> t, segA, segB;
    // star: half the trapezoid nodes (the integrand is π-periodic in θ)
    std::vector<double> radius, cosine;
    double rPlus = 0.0;
    int modes = 0;

    double polygon(double rho) const {
        if (rho == 0.0) return vol;
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < t.size(); ++i) s += cosLinear(rho, t[i], t[i + 1], segA[i], segB[i]);
        return s;
    }

    double star(double rho, int stride) const {
        double s = 0.0;
        const std::size_t n = radius.size();
        for (std::size_t k = 0; k < n; k += stride) s += radialCosineIntegral(rho * cosine[k], radius[k]);
        return 2.0 * s * (kTwoPi / kStarNodes) * stride;
    }

    double spiky(double rho) const {
        const auto& s = std::get<shape::Spiky>(spec);
        if (rho == 0.0) return vol;
        const int n = s.n;
        const double rIn = s.scale * (1.0 - s.zeta.delta);
        const double rOut = s.scale * (1.0 + s.zeta.deltaTilde);
        double total = ftBall(2, rIn, rho);
        struct Band {
            double r0, r1, halfWidth;
        };
        std::vector<Band> bands{{rIn, s.scale, 0.5 * kPi / n}};
        if (s.zeta.a > 0.0) bands.push_back({s.scale, rOut, s.zeta.a * kPi / n});
        const double phi = e.angle();
        // |J_ν(x)| ≤ (x/2)^ν/Γ(ν+1): drop harmonics whose bound is below 1e-18
        int mmax = 0;
        const double x = rho * rOut;
        const int cap = static_cast<int>(std::ceil((x + 40.0) / n));
        while (mmax < cap) {
            const double nu = double(mmax + 1) * n;
            if (nu * std::log(0.5 * x) - std::lgamma(nu + 1.0) < -41.4) break;
            ++mmax;
        }
        for (const auto& b : bands) {
            const double zeta = b.halfWidth * n / kPi;
            total += kTwoPi * zeta * (b.r1 * special::besselJ(1, rho * b.r1) - b.r0 * special::besselJ(1, rho * b.r0)) / rho;
            if (mmax == 0) continue;
            // harmonics 2k = m·n survive the n-fold angular sum
            std::vector<double> coeff(mmax + 1, 0.0);
            for (int m = 1; m <= mmax; ++m) {
                const double sign = ((m * n / 2) % 2 == 0) ? 1.0 : -1.0;
                coeff[m] = sign * 4.0 * std::sin(m * n * b.halfWidth) * std::cos(m * n * phi) / m;
            }
            total += quad::gauss<20>(
                [&](double r) {
                    const auto J = special::besselJSequence(mmax * n, rho * r);
                    double acc = 0.0;
                    for (int m = 1; m <= mmax; ++m) acc += coeff[m] * J[m * n];
                    return r * acc;
                },
                b.r0, b.r1);
        }
        return total;
    }

    double evaluate(double rho, bool scanning) const {
        rho = std::fabs(rho);
        switch (kind) {
            case Kind::Ball: {
                const auto& b = std::get<shape::Ball>(spec);
                return ftBall(b.dim, b.radius, rho);
            }
            case Kind::Rectangle: {
                const auto& r = std::get<shape::Rectangle>(spec);
                std::vector<double> xi(r.halfSides.size(), 0.0);
                xi[0] = rho * e.x;
                if (xi.size() > 1) xi[1] = rho * e.y;
                return ftRectangle(r.halfSides, xi);
            }
            case Kind::Polygon: return polygon(rho);
            case Kind::Star: {
                if (rho == 0.0) return vol;
                int stride = 1;
                if (scanning) {
                    // trapezoid error decays once nodes exceed the angular bandwidth
                    const double need = 48.0 + 1.5 * rho * rPlus + 24.0 * modes;
                    while (stride < 32 && double(kStarNodes) / (2 * stride) >= 2.0 * need) stride *= 2;
                }
                return star(rho, stride);
            }
            case Kind::Spiky: return spiky(rho);
            case Kind::Intervals: {
                const auto& u = std::get<shape::IntervalUnion>(spec);
                double s = 0.0;
                for (double w : u.centers) s += std::cos(w * rho);
                return 2.0 * sinc(0.5 * rho) * s * (2.0 * shape::IntervalUnion::kHalfWidth);
            }
            case Kind::Revolution: {
                const double alpha = std::get<shape::RevolutionBody>(spec).alpha;
                if (std::fabs(e.y) < 1e-14) return ftRevolutionAxis(alpha, rho);
                return revolutionGeneral(alpha, rho * e.x, rho * std::fabs(e.y));
            }
        }
        return 0.0;
    }
};

DirectionalTransform::DirectionalTransform(const DomainSpec& spec, Vec2 e) : impl_(std::make_unique<Impl>()) {
    validate(spec);
    e = requireUnit(e);
    auto& m = *impl_;
    m.spec = spec;
    m.e = e;
    m.vol = nullvar::volume(spec);
    m.w = supportHalfBreadth(spec, e);
    std::visit(Overloaded{
                   [&](const shape::Ball&) { m.kind = Impl::Kind::Ball; },
                   [&](const shape::Rectangle&) { m.kind = Impl::Kind::Rectangle; },
                   [&](const shape::ConvexPolygon& p) {
                       m.kind = Impl::Kind::Polygon;
                       for (const auto& v : p.vertices) m.t.push_back(dot(v, e));
                       std::sort(m.t.begin(), m.t.end());
                       // merge projections that coincide up to roundoff
                       std::vector<double> u{m.t.front()};
                       for (double x : m.t)
                           if (x - u.back() > 1e-13 * m.w) u.push_back(x);
                       u.back() = m.t.back();
                       m.t = u;
                       // ν is linear between projections; sample strictly inside each
                       // segment so that faces orthogonal to e do not meet roundoff
                       for (std::size_t i = 0; i + 1 < m.t.size(); ++i) {
                           const double d = m.t[i + 1] - m.t[i];
                           const double x1 = m.t[i] + d / 3.0;
                           const double x2 = m.t[i] + 2.0 * d / 3.0;
                           const double n1 = clipChord(p.vertices, e, x1);
                           const double n2 = clipChord(p.vertices, e, x2);
                           const double B = (n2 - n1) / (x2 - x1);
                           m.segB.push_back(B);
                           m.segA.push_back(n1 - B * x1);
                       }
                   },
                   [&](const shape::StarShaped& s) {
                       m.kind = Impl::Kind::Star;
                       const double phi = e.angle();
                       m.radius.resize(kStarNodes / 2);
                       m.cosine.resize(kStarNodes / 2);
                       for (int k = 0; k < kStarNodes / 2; ++k) {
                           const double th = kTwoPi * k / kStarNodes;
                           m.radius[k] = s.scale * (1.0 + s.epsilon * s.profile(th));
                           m.cosine[k] = std::cos(th - phi);
                           m.rPlus = std::max(m.rPlus, m.radius[k]);
                       }
                       m.modes = s.epsilon > 0.0 ? s.profile.modes() : 0;
                   },
                   [&](const shape::Spiky&) { m.kind = Impl::Kind::Spiky; },
                   [&](const shape::IntervalUnion&) {
                       if (std::fabs(std::fabs(e.x) - 1.0) > 1e-12)
                           throw DomainError("a one-dimensional domain only has the directions ±1");
                       m.kind = Impl::Kind::Intervals;
                   },
                   [&](const shape::RevolutionBody&) { m.kind = Impl::Kind::Revolution; },
               },
               spec);
}

DirectionalTransform::~DirectionalTransform() = default;
DirectionalTransform::DirectionalTransform(DirectionalTransform&&) noexcept = default;
DirectionalTransform& DirectionalTransform::operator=(DirectionalTransform&&) noexcept = default;

double DirectionalTransform::operator()(double rho) const { return impl_->evaluate(rho, false); }
double DirectionalTransform::scan(double rho) const { return impl_->evaluate(rho, true); }
double DirectionalTransform::halfBreadth() const { return impl_->w; }
double DirectionalTransform::volume() const { return impl_->vol; }

double ftDirectional(const DomainSpec& spec, Vec2 e, double rho) { return DirectionalTransform(spec, e)(rho); }

double ftStarPolar(const shape::StarShaped& s, Vec2 e, double rho, int nodes) {
    if (nodes < 8) throw DomainError("too few angular nodes");
    const double phi = requireUnit(e).angle();
    double sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double th = kTwoPi * k / nodes;
        const double R = s.scale * (1.0 + s.epsilon * s.profile(th));
        sum += radialCosineIntegral(rho * std::cos(th - phi), R);
    }
    return sum * kTwoPi / nodes;
}

double ftSpikyArcs(const shape::Spiky& s, Vec2 e, double rho) {
    const double phi = requireUnit(e).angle();
    double total = 0.0;
    for (const auto& a : spikyArcs(s)) {
        total += quad::gauss<20>([&](double th) { return radialCosineIntegral(rho * std::cos(th - phi), a.r); },
                                 a.theta0, a.theta1);
    }
    return total;
}

AveragedBessel averagedBessel(const DomainSpec& spec) {
    if (!isPlanarStar(spec)) throw UnsupportedDomain("averaged Bessel integral needs a planar star-shaped domain");
    const auto d = descriptors(spec);
    std::vector<double> br{0.0, d.rPlus};
    for (double b : ringBreakpoints(spec))
        if (b > 0.0 && b < d.rPlus) br.push_back(b);
    AveragedBessel out;
    out.direct = quad::adaptivePanels(
        [&](double r) { return ringFunctions(spec, r).eta * special::besselJ(0, r); }, br, 1e-12);
    const double tail = special::besselJ(0, d.rPlus);
    out.viaAlpha = d.volume * (quad::adaptivePanels(
                                   [&](double r) { return ringFunctions(spec, r).alpha * special::besselJ(1, r); },
                                   br, 1e-12) +
                               tail);
    if (std::fabs(out.direct - out.viaAlpha) > 1e-8 * d.volume)
        throw NumericalFailure("averaged Bessel routes disagree", std::fabs(out.direct - out.viaAlpha));
    return out;
}

}  // namespace nullvar
