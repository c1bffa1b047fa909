#include "nullvar/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "nullvar/errors.hpp"
#include "nullvar/quadrature.hpp"

namespace nullvar {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kAngularSamples = 4096;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double wrapPi(double a) {
    a = std::fmod(a + kPi, kTwoPi);
    if (a < 0) a += kTwoPi;
    return a - kPi;
}

double wrapTwoPi(double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0 ? a + kTwoPi : a;
}

// Edge data of a convex polygon containing the origin.
struct Edge {
    Vec2 a, b;
    Vec2 normal;   // outward unit normal
    double h;      // distance from the origin to the supporting line
    double normalAngle;
    double ua, ub; // angular span relative to the normal angle, ua < ub
};

std::vector<Edge> polygonEdges(const std::vector<Vec2>& v) {
    std::vector<Edge> edges;
    const std::size_t n = v.size();
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Edge e;
        e.a = v[i];
        e.b = v[(i + 1) % n];
        const Vec2 d = e.b - e.a;
        const double len = d.norm();
        e.normal = Vec2(d.y / len, -d.x / len);
        e.h = dot(e.normal, e.a);
        e.normalAngle = e.normal.angle();
        e.ua = wrapPi(e.a.angle() - e.normalAngle);
        const double span = wrapTwoPi(e.b.angle() - e.a.angle());
        e.ub = e.ua + span;
        edges.push_back(e);
    }
    return edges;
}

double profileRadius(const shape::StarShaped& s, double theta) {
    return s.scale * (1.0 + s.epsilon * s.profile(theta));
}

double spikyRadius(const shape::Spiky& s, double theta) {
    const double sector = kTwoPi / s.n;
    double phi = std::fmod(theta, sector);
    if (phi < 0) phi += sector;
    if (phi > 0.5 * sector) phi -= sector;
    phi = std::fabs(phi);
    const double unit = kPi / s.n;
    if (phi < s.zeta.a * unit) return s.scale * (1.0 + s.zeta.deltaTilde);
    if (phi < 0.5 * unit) return s.scale;
    return s.scale * (1.0 - s.zeta.delta);
}

// Location of the extremum of a smooth periodic function: dense sampling
// plus Brent refinement.
template <class F>
double periodicArgExtremum(F&& f, bool maximize) {
    const double h = kTwoPi / kAngularSamples;
    const double sign = maximize ? -1.0 : 1.0;
    int best = 0;
    double bestVal = sign * f(0.0);
    for (int i = 1; i < kAngularSamples; ++i) {
        const double v = sign * f(i * h);
        if (v < bestVal) {
            bestVal = v;
            best = i;
        }
    }
    auto g = [&](double t) { return sign * f(t); };
    const auto r = boost::math::tools::brent_find_minima(g, (best - 1) * h, (best + 1) * h, 52);
    return r.second <= bestVal ? r.first : best * h;
}

template <class F>
double periodicExtremum(F&& f, bool maximize) {
    return f(periodicArgExtremum(f, maximize));
}

double starExtremum(const shape::StarShaped& s, bool maximize) {
    if (s.epsilon == 0.0 || s.profile.isZero()) return s.scale;
    return periodicExtremum([&](double t) { return profileRadius(s, t); }, maximize);
}

double polygonArea(const std::vector<Vec2>& v) {
    double a = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) a += cross(v[i], v[(i + 1) % v.size()]);
    return 0.5 * a;
}

double polygonRadius(const std::vector<Edge>& edges, double theta) {
    const Vec2 u = Vec2::unit(theta);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : edges) {
        const double c = dot(u, e.normal);
        if (c > 1e-15) best = std::min(best, e.h / c);
    }
    return best;
}

// Sign changes of R(θ) - r on [0, 2π), refined; returns sorted crossing angles.
std::vector<double> starCrossings(const shape::StarShaped& s, double r) {
    std::vector<double> out;
    const double h = kTwoPi / kAngularSamples;
    auto g = [&](double t) { return profileRadius(s, t) - r; };
    double ga = g(0.0);
    for (int i = 0; i < kAngularSamples; ++i) {
        const double a = i * h;
        const double b = a + h;
        const double gb = g(b);
        if ((ga < 0) != (gb < 0)) {
            boost::uintmax_t iters = 100;
            auto tol = [](double lo, double hi) { return std::fabs(hi - lo) <= 1e-15; };
            const auto br = boost::math::tools::toms748_solve(g, a, b, ga, gb, tol, iters);
            out.push_back(0.5 * (br.first + br.second));
        }
        ga = gb;
    }
    return out;
}

}  // namespace

// --- RadialProfile ---------------------------------------------------------

double RadialProfile::operator()(double theta) const {
    double v = 0.0;
    for (int m = 1; m <= modes(); ++m) {
        const double a = 2.0 * m * theta;
        v += cosCoeff(m) * std::cos(a) + sinCoeff(m) * std::sin(a);
    }
    return v;
}

double RadialProfile::derivative(double theta) const {
    double v = 0.0;
    for (int m = 1; m <= modes(); ++m) {
        const double a = 2.0 * m * theta;
        v += 2.0 * m * (-cosCoeff(m) * std::sin(a) + sinCoeff(m) * std::cos(a));
    }
    return v;
}

double RadialProfile::secondDerivative(double theta) const {
    double v = 0.0;
    for (int m = 1; m <= modes(); ++m) {
        const double a = 2.0 * m * theta;
        v -= 4.0 * m * m * (cosCoeff(m) * std::cos(a) + sinCoeff(m) * std::sin(a));
    }
    return v;
}

double RadialProfile::l1Norm() const {
    double s = 0.0;
    for (double c : p) s += std::fabs(c);
    for (double c : q) s += std::fabs(c);
    return s;
}

bool RadialProfile::isZero() const { return l1Norm() == 0.0; }

RadialProfile RadialProfile::rotated(double phi) const {
    RadialProfile r;
    const int n = modes();
    r.p.assign(n, 0.0);
    r.q.assign(n, 0.0);
    for (int m = 1; m <= n; ++m) {
        const double c = std::cos(2.0 * m * phi);
        const double s = std::sin(2.0 * m * phi);
        r.p[m - 1] = cosCoeff(m) * c + sinCoeff(m) * s;
        r.q[m - 1] = -cosCoeff(m) * s + sinCoeff(m) * c;
    }
    return r;
}

RadialProfile RadialProfile::scaled(double s) const {
    RadialProfile r = *this;
    for (double& c : r.p) c *= s;
    for (double& c : r.q) c *= s;
    return r;
}

RadialProfile RadialProfile::mode(int m, double a, double b) {
    if (m < 1 || m > kMaxModes) throw DomainError("profile mode outside [1, 16]");
    RadialProfile r;
    r.p.assign(m, 0.0);
    r.q.assign(m, 0.0);
    r.p[m - 1] = a;
    r.q[m - 1] = b;
    return r;
}

double ZetaProfile::operator()(double r) const {
    if (r <= 1.0 - delta) return 1.0;
    if (r <= 1.0) return 0.5;
    if (r <= 1.0 + deltaTilde) return a;
    return 0.0;
}

// --- construction ----------------------------------------------------------

DomainSpec makeBall(int dim, double radius) {
    DomainSpec s = shape::Ball{dim, radius};
    validate(s);
    return s;
}

DomainSpec makeRectangle(std::vector<double> halfSides) {
    DomainSpec s = shape::Rectangle{std::move(halfSides)};
    validate(s);
    return s;
}

DomainSpec makeConvexPolygon(std::vector<Vec2> vertices) {
    DomainSpec s = shape::ConvexPolygon{std::move(vertices)};
    validate(s);
    return s;
}

DomainSpec makeStarShaped(RadialProfile profile, double epsilon, double scale) {
    DomainSpec s = shape::StarShaped{std::move(profile), epsilon, scale};
    validate(s);
    return s;
}

DomainSpec makeSpiky(int n, ZetaProfile zeta, double scale) {
    DomainSpec s = shape::Spiky{n, zeta, scale};
    validate(s);
    return s;
}

DomainSpec makeIntervalUnion(std::vector<double> centers) {
    DomainSpec s = shape::IntervalUnion{std::move(centers)};
    validate(s);
    return s;
}

DomainSpec makeRevolutionBody(double alpha) {
    DomainSpec s = shape::RevolutionBody{alpha};
    validate(s);
    return s;
}

DomainSpec makeRegularPolygon(int halfCount, double radius, double rotation) {
    if (halfCount < 2) throw InvalidDomain("regular polygon needs at least 4 vertices");
    std::vector<Vec2> v(2 * halfCount);
    for (int i = 0; i < halfCount; ++i) {
        v[i] = Vec2::polar(radius, rotation + kPi * i / halfCount);
        v[i + halfCount] = -v[i];
    }
    return makeConvexPolygon(std::move(v));
}

void validate(const DomainSpec& spec) {
    auto bad = [](const std::string& m) { throw InvalidDomain(m); };
    std::visit(
        Overloaded{
            [&](const shape::Ball& b) {
                if (b.dim < 1) bad("ball dimension must be >= 1");
                if (!(b.radius > 0.0) || !std::isfinite(b.radius)) bad("ball radius must be positive");
            },
            [&](const shape::Rectangle& r) {
                if (r.halfSides.empty()) bad("rectangle needs at least one side");
                for (double h : r.halfSides)
                    if (!(h > 0.0) || !std::isfinite(h)) bad("rectangle half-sides must be positive");
            },
            [&](const shape::ConvexPolygon& p) {
                const auto& v = p.vertices;
                const std::size_t n = v.size();
                if (n < 4 || n % 2 != 0) bad("balanced polygon needs an even number (>= 4) of vertices");
                double scale = 0.0;
                for (const auto& x : v) {
                    if (!std::isfinite(x.x) || !std::isfinite(x.y)) bad("non-finite polygon vertex");
                    scale = std::max(scale, x.norm());
                }
                if (!(polygonArea(v) > 1e-14 * scale * scale)) bad("polygon must be counter-clockwise with positive area");
                for (std::size_t i = 0; i < n; ++i) {
                    const Vec2 d1 = v[(i + 1) % n] - v[i];
                    const Vec2 d2 = v[(i + 2) % n] - v[(i + 1) % n];
                    if (!(cross(d1, d2) > 1e-14 * scale * scale)) bad("polygon turning is not strictly convex");
                    if ((v[(i + n / 2) % n] + v[i]).norm() > 1e-12 * std::max(1.0, scale))
                        bad("polygon is not centrally symmetric");
                }
            },
            [&](const shape::StarShaped& s) {
                if (!(s.epsilon >= 0.0) || !std::isfinite(s.epsilon)) bad("epsilon must be >= 0");
                if (!(s.scale > 0.0) || !std::isfinite(s.scale)) bad("scale must be positive");
                if (s.profile.modes() > RadialProfile::kMaxModes) bad("profile has more than 16 modes");
                for (double c : s.profile.p)
                    if (!std::isfinite(c)) bad("non-finite profile coefficient");
                for (double c : s.profile.q)
                    if (!std::isfinite(c)) bad("non-finite profile coefficient");
                if (s.epsilon * s.profile.l1Norm() >= 1.0 && starExtremum(s, false) <= 0.0)
                    bad("1 + eps F(theta) must stay positive");
            },
            [&](const shape::Spiky& s) {
                if (s.n < 4 || s.n % 2 != 0) bad("spiky domain needs an even spike count (balance)");
                const auto& z = s.zeta;
                if (!(z.deltaTilde > 0.0 && z.deltaTilde < 1.0)) bad("deltaTilde must lie in (0, 1)");
                if (!(z.delta > 0.0 && z.delta < z.deltaTilde)) bad("delta must lie in (0, deltaTilde)");
                if (!(z.a >= 0.0 && z.a <= 0.5)) bad("spike plateau a must lie in [0, 1/2]");
                if (!(s.scale > 0.0)) bad("scale must be positive");
            },
            [&](const shape::IntervalUnion& u) {
                if (u.centers.empty()) bad("interval union needs at least one center");
                if (!(u.centers[0] >= 1.0)) bad("first center must be >= 1");
                for (std::size_t j = 1; j < u.centers.size(); ++j)
                    if (!(u.centers[j] >= u.centers[j - 1] + 1.0)) bad("centers must be spaced by >= 1");
            },
            [&](const shape::RevolutionBody& r) {
                if (!(r.alpha > 0.0) || !std::isfinite(r.alpha)) bad("alpha must be positive");
            },
        },
        spec);
}

std::string typeName(const DomainSpec& spec) {
    static const char* names[] = {"ball", "rectangle", "polygon", "star", "spiky", "intervals", "revolution"};
    return names[spec.index()];
}

int dimension(const DomainSpec& spec) {
    return std::visit(Overloaded{
                          [](const shape::Ball& b) { return b.dim; },
                          [](const shape::Rectangle& r) { return int(r.halfSides.size()); },
                          [](const shape::IntervalUnion&) { return 1; },
                          [](const shape::RevolutionBody&) { return 3; },
                          [](const auto&) { return 2; },
                      },
                      spec);
}

bool isPlanar(const DomainSpec& spec) { return dimension(spec) == 2; }

bool isPlanarStar(const DomainSpec& spec) {
    return isPlanar(spec) && !std::holds_alternative<shape::IntervalUnion>(spec) &&
           !std::holds_alternative<shape::RevolutionBody>(spec);
}

DomainSpec scaled(const DomainSpec& spec, double s) {
    if (!(s > 0.0)) throw DomainError("homothety factor must be positive");
    return std::visit(Overloaded{
                          [&](shape::Ball b) -> DomainSpec { b.radius *= s; return b; },
                          [&](shape::Rectangle r) -> DomainSpec {
                              for (double& h : r.halfSides) h *= s;
                              return r;
                          },
                          [&](shape::ConvexPolygon p) -> DomainSpec {
                              for (auto& v : p.vertices) v = v * s;
                              return p;
                          },
                          [&](shape::StarShaped t) -> DomainSpec { t.scale *= s; return t; },
                          [&](shape::Spiky t) -> DomainSpec { t.scale *= s; return t; },
                          [&](const shape::IntervalUnion&) -> DomainSpec {
                              throw UnsupportedDomain("interval unions have a fixed half-width");
                          },
                          [&](const shape::RevolutionBody&) -> DomainSpec {
                              throw UnsupportedDomain("homothety of a revolution body leaves the family");
                          },
                      },
                      spec);
}

std::vector<Vec2> polygonVertices(const DomainSpec& spec) {
    if (const auto* p = std::get_if<shape::ConvexPolygon>(&spec)) return p->vertices;
    if (const auto* r = std::get_if<shape::Rectangle>(&spec)) {
        if (r->halfSides.size() != 2) throw UnsupportedDomain("only planar rectangles are polygons");
        const double a = r->halfSides[0];
        const double b = r->halfSides[1];
        return {{a, -b}, {a, b}, {-a, b}, {-a, -b}};
    }
    throw UnsupportedDomain(typeName(spec) + " is not a polygon");
}

// --- geometry --------------------------------------------------------------

double volume(const DomainSpec& spec) {
    return std::visit(
        Overloaded{
            [](const shape::Ball& b) {
                const double d = b.dim;
                return std::pow(kPi, d / 2) / std::tgamma(d / 2 + 1) * std::pow(b.radius, d);
            },
            [](const shape::Rectangle& r) {
                double v = 1.0;
                for (double h : r.halfSides) v *= 2.0 * h;
                return v;
            },
            [](const shape::ConvexPolygon& p) { return polygonArea(p.vertices); },
            [](const shape::StarShaped& s) {
                double sq = 0.0;
                for (int m = 1; m <= s.profile.modes(); ++m)
                    sq += s.profile.cosCoeff(m) * s.profile.cosCoeff(m) + s.profile.sinCoeff(m) * s.profile.sinCoeff(m);
                return s.scale * s.scale * kPi * (1.0 + 0.5 * s.epsilon * s.epsilon * sq);
            },
            [](const shape::Spiky& s) {
                double v = 0.0;
                for (const auto& a : spikyArcs(s)) v += 0.5 * a.r * a.r * (a.theta1 - a.theta0);
                return v;
            },
            [](const shape::IntervalUnion& u) { return 2.0 * u.centers.size(); },
            [](const shape::RevolutionBody& r) { return 2.0 * kPi / (3.0 * r.alpha * r.alpha); },
        },
        spec);
}

double radialBoundary(const DomainSpec& spec, double theta) {
    return std::visit(Overloaded{
                          [&](const shape::Ball& b) {
                              if (b.dim != 2) throw UnsupportedDomain("radial boundary needs a planar domain");
                              return b.radius;
                          },
                          [&](const shape::Rectangle&) { return polygonRadius(polygonEdges(polygonVertices(spec)), theta); },
                          [&](const shape::ConvexPolygon& p) { return polygonRadius(polygonEdges(p.vertices), theta); },
                          [&](const shape::StarShaped& s) { return profileRadius(s, theta); },
                          [&](const shape::Spiky& s) { return spikyRadius(s, theta); },
                          [&](const auto&) -> double {
                              throw UnsupportedDomain("radial boundary needs a planar star-shaped domain");
                          },
                      },
                      spec);
}

double supportHalfBreadth(const DomainSpec& spec, Vec2 e) {
    e = requireUnit(e);
    return std::visit(
        Overloaded{
            [&](const shape::Ball& b) { return b.radius; },
            [&](const shape::Rectangle& r) {
                double w = r.halfSides[0] * std::fabs(e.x);
                if (r.halfSides.size() > 1) w += r.halfSides[1] * std::fabs(e.y);
                return w;
            },
            [&](const shape::ConvexPolygon& p) {
                double w = -std::numeric_limits<double>::infinity();
                for (const auto& v : p.vertices) w = std::max(w, dot(v, e));
                return w;
            },
            [&](const shape::StarShaped& s) {
                const double phi = e.angle();
                return periodicExtremum([&](double t) { return profileRadius(s, t) * std::cos(t - phi); }, true);
            },
            [&](const shape::Spiky& s) {
                const double phi = e.angle();
                double w = 0.0;
                for (const auto& a : spikyArcs(s)) {
                    const double mid = 0.5 * (a.theta0 + a.theta1);
                    const double half = 0.5 * (a.theta1 - a.theta0);
                    const double d = std::fabs(wrapPi(phi - mid));
                    w = std::max(w, d <= half ? a.r : a.r * std::cos(d - half));
                }
                return w;
            },
            [&](const shape::IntervalUnion& u) {
                return std::fabs(e.x) * (u.centers.back() + shape::IntervalUnion::kHalfWidth);
            },
            [&](const shape::RevolutionBody& r) { return std::max(std::fabs(e.x), std::fabs(e.y) / r.alpha); },
        },
        spec);
}

GeometricDescriptors descriptors(const DomainSpec& spec) {
    validate(spec);
    GeometricDescriptors d;
    d.volume = volume(spec);
    d.halfBreadth = [spec](Vec2 e) { return supportHalfBreadth(spec, e); };
    if (isPlanarStar(spec)) d.radial = [spec](double t) { return radialBoundary(spec, t); };
    std::visit(Overloaded{
                   [&](const shape::Ball& b) { d.rMinus = d.rPlus = b.radius; },
                   [&](const shape::Rectangle& r) {
                       double sq = 0.0;
                       d.rMinus = r.halfSides[0];
                       for (double h : r.halfSides) {
                           sq += h * h;
                           d.rMinus = std::min(d.rMinus, h);
                       }
                       d.rPlus = std::sqrt(sq);
                   },
                   [&](const shape::ConvexPolygon& p) {
                       d.rMinus = std::numeric_limits<double>::infinity();
                       for (const auto& e : polygonEdges(p.vertices)) d.rMinus = std::min(d.rMinus, e.h);
                       for (const auto& v : p.vertices) d.rPlus = std::max(d.rPlus, v.norm());
                   },
                   [&](const shape::StarShaped& s) {
                       d.rMinus = starExtremum(s, false);
                       d.rPlus = starExtremum(s, true);
                   },
                   [&](const shape::Spiky& s) {
                       d.rMinus = s.scale * (1.0 - s.zeta.delta);
                       d.rPlus = s.scale * (s.zeta.a > 0.0 ? 1.0 + s.zeta.deltaTilde : 1.0);
                   },
                   [&](const shape::IntervalUnion& u) {
                       d.rMinus = shape::IntervalUnion::kHalfWidth;
                       d.rPlus = u.centers.back() + shape::IntervalUnion::kHalfWidth;
                   },
                   [&](const shape::RevolutionBody& r) {
                       d.rMinus = 1.0 / std::sqrt(1.0 + r.alpha * r.alpha);
                       d.rPlus = std::max(1.0, 1.0 / r.alpha);
                   },
               },
               spec);
    d.diameter = 2.0 * d.rPlus;
    return d;
}

RingValues ringFunctions(const DomainSpec& spec, double r) {
    if (!(r >= 0.0)) throw DomainError("ring radius must be >= 0");
    if (!isPlanarStar(spec)) throw UnsupportedDomain("ring functions need a planar star-shaped domain");
    const double vol = volume(spec);
    double measure = 0.0;  // angular measure of {θ : R(θ) > r}
    double area = 0.0;     // vol(Ω ∩ B(r))
    std::visit(Overloaded{
                   [&](const shape::Ball& b) {
                       measure = r < b.radius ? kTwoPi : 0.0;
                       area = kPi * std::min(r, b.radius) * std::min(r, b.radius);
                   },
                   [&](const shape::StarShaped& s) {
                       const auto cross = starCrossings(s, r);
                       if (cross.empty()) {
                           if (profileRadius(s, 0.0) > r) {
                               measure = kTwoPi;
                               area = kPi * r * r;
                           } else {
                               area = vol;
                           }
                           return;
                       }
                       auto half = [&](double t) { const double R = profileRadius(s, t); return 0.5 * R * R; };
                       const std::size_t n = cross.size();
                       for (std::size_t i = 0; i < n; ++i) {
                           const double a = cross[i];
                           const double b = i + 1 < n ? cross[i + 1] : cross[0] + kTwoPi;
                           const double mid = 0.5 * (a + b);
                           if (profileRadius(s, mid) > r) {
                               measure += b - a;
                               area += 0.5 * r * r * (b - a);
                           } else {
                               const int sub = std::max(1, int(std::ceil((b - a) / (kTwoPi / 64))));
                               area += quad::panels<20>(half, {a, b}, sub);
                           }
                       }
                   },
                   [&](const shape::Spiky& s) {
                       for (const auto& a : spikyArcs(s)) {
                           const double w = a.theta1 - a.theta0;
                           if (a.r > r) measure += w;
                           const double m = std::min(a.r, r);
                           area += 0.5 * m * m * w;
                       }
                   },
                   [&](const auto&) {
                       for (const auto& e : polygonEdges(polygonVertices(spec))) {
                           const double span = e.ub - e.ua;
                           if (r <= e.h) {
                               measure += span;
                               area += 0.5 * r * r * span;
                               continue;
                           }
                           const double beta = std::acos(e.h / r);
                           const double lo = std::max(e.ua, -beta);
                           const double hi = std::min(e.ub, beta);
                           const double inner = std::max(0.0, hi - lo);  // where R ≤ r
                           measure += span - inner;
                           area += 0.5 * r * r * (span - inner);
                           if (inner > 0.0) area += 0.5 * e.h * e.h * (std::tan(hi) - std::tan(lo));
                       }
                   },
               },
               spec);
    RingValues out;
    out.eta = r * measure;
    out.alpha = std::min(1.0, area / vol);
    out.zeta = measure / kTwoPi;
    return out;
}

std::vector<double> ringBreakpoints(const DomainSpec& spec) {
    if (!isPlanarStar(spec)) throw UnsupportedDomain("ring functions need a planar star-shaped domain");
    std::vector<double> out;
    std::visit(Overloaded{
                   [&](const shape::Ball& b) { out.push_back(b.radius); },
                   [&](const shape::StarShaped& s) {
                       const double h = kTwoPi / kAngularSamples;
                       for (int i = 0; i < kAngularSamples; ++i) {
                           const double a = profileRadius(s, (i - 1) * h);
                           const double b = profileRadius(s, i * h);
                           const double c = profileRadius(s, (i + 1) * h);
                           if ((b >= a && b >= c) || (b <= a && b <= c)) {
                               const bool mx = b >= a;
                               const auto r = boost::math::tools::brent_find_minima(
                                   [&](double t) { return (mx ? -1.0 : 1.0) * profileRadius(s, t); }, (i - 1) * h,
                                   (i + 1) * h, 52);
                               out.push_back(mx ? std::max(b, -r.second) : std::min(b, r.second));
                           }
                       }
                   },
                   [&](const shape::Spiky& s) {
                       for (const auto& a : spikyArcs(s)) out.push_back(a.r);
                   },
                   [&](const auto&) {
                       for (const auto& e : polygonEdges(polygonVertices(spec))) {
                           out.push_back(e.h);
                           out.push_back(e.a.norm());
                       }
                   },
               },
               spec);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::fabs(a - b) <= 1e-13 * b; }),
              out.end());
    return out;
}

double chordWidth(const DomainSpec& spec, Vec2 e, double t) {
    e = requireUnit(e);
    if (!isPlanar(spec)) throw UnsupportedDomain("chord function needs a planar domain");
    const auto conv = checkConvexBalanced(spec);
    if (!conv.convex) throw UnsupportedDomain("chord function is restricted to convex domains");
    if (const auto* b = std::get_if<shape::Ball>(&spec)) {
        return std::fabs(t) < b->radius ? 2.0 * std::sqrt(b->radius * b->radius - t * t) : 0.0;
    }
    if (const auto* s = std::get_if<shape::StarShaped>(&spec)) {
        // Along a convex boundary x·e decreases monotonically from its maximum
        // (at θ*) to its minimum (at θ* + π by balance); the two level-t
        // crossings bound the chord.
        auto height = [&](double th) { return profileRadius(*s, th) * std::cos(th - e.angle()); };
        const double thStar = periodicArgExtremum(height, true);
        const double w = height(thStar);
        if (std::fabs(t) >= w) return 0.0;
        auto f = [&](double th) { return height(th) - t; };
        auto tol = [](double lo, double hi) { return std::fabs(hi - lo) <= 1e-15; };
        Vec2 ends[2];
        for (int side = 0; side < 2; ++side) {
            const double a = thStar;
            const double b = side == 0 ? thStar + kPi : thStar - kPi;
            boost::uintmax_t iters = 200;
            const auto br = boost::math::tools::toms748_solve(f, std::min(a, b), std::max(a, b), tol, iters);
            const double th = 0.5 * (br.first + br.second);
            ends[side] = Vec2::polar(profileRadius(*s, th), th);
        }
        return (ends[0] - ends[1]).norm();
    }
    // polygon clipping of the line x = t e + s p
    const auto v = polygonVertices(spec);
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

ConvexityReport checkConvexBalanced(const DomainSpec& spec) {
    ConvexityReport rep;
    rep.balanced = true;
    std::visit(Overloaded{
                   [&](const shape::Ball&) { rep.convex = true; },
                   [&](const shape::Rectangle&) { rep.convex = true; },
                   [&](const shape::RevolutionBody&) { rep.convex = true; },
                   [&](const shape::ConvexPolygon& p) {
                       const auto& v = p.vertices;
                       const std::size_t n = v.size();
                       rep.convex = true;
                       rep.balanced = n % 2 == 0;
                       rep.minCurvatureMeasure = std::numeric_limits<double>::infinity();
                       for (std::size_t i = 0; i < n; ++i) {
                           const double c = cross(v[(i + 1) % n] - v[i], v[(i + 2) % n] - v[(i + 1) % n]);
                           rep.minCurvatureMeasure = std::min(rep.minCurvatureMeasure, c);
                           if (c <= 0) rep.convex = false;
                           if (rep.balanced && (v[(i + n / 2) % n] + v[i]).norm() > 1e-12 * std::max(1.0, v[i].norm()))
                               rep.balanced = false;
                       }
                   },
                   [&](const shape::StarShaped& s) {
                       // curvature of r = R(θ) has the sign of R² + 2R'² − R R''
                       double mn = std::numeric_limits<double>::infinity();
                       for (int i = 0; i < kAngularSamples; ++i) {
                           const double t = kTwoPi * i / kAngularSamples;
                           const double R = 1.0 + s.epsilon * s.profile(t);
                           const double R1 = s.epsilon * s.profile.derivative(t);
                           const double R2 = s.epsilon * s.profile.secondDerivative(t);
                           mn = std::min(mn, R * R + 2.0 * R1 * R1 - R * R2);
                       }
                       constexpr double tol = 1e-10;
                       rep.minCurvatureMeasure = mn;
                       rep.convex = mn >= -tol;
                       rep.indeterminate = std::fabs(mn) <= tol;
                   },
                   [&](const shape::Spiky&) { rep.convex = false; },
                   [&](const shape::IntervalUnion&) { rep.convex = false; },
               },
               spec);
    return rep;
}

std::vector<Arc> spikyArcs(const shape::Spiky& s) {
    std::vector<Arc> arcs;
    const double unit = kPi / s.n;
    const double outer = s.scale * (1.0 + s.zeta.deltaTilde);
    const double mid = s.scale;
    const double inner = s.scale * (1.0 - s.zeta.delta);
    const double wa = s.zeta.a * unit;
    arcs.reserve(5 * s.n);
    for (int k = 0; k < s.n; ++k) {
        const double c = 2.0 * unit * k;
        if (wa > 0.0) arcs.push_back({c - wa, c + wa, outer});
        if (0.5 * unit > wa) {
            arcs.push_back({c + wa, c + 0.5 * unit, mid});
            arcs.push_back({c - 0.5 * unit, c - wa, mid});
        }
        arcs.push_back({c + 0.5 * unit, c + unit, inner});
        arcs.push_back({c - unit, c - 0.5 * unit, inner});
    }
    return arcs;
}

Vec2 requireUnit(Vec2 e) {
    const double n = e.norm();
    if (!(std::fabs(n - 1.0) <= 1e-9)) {
        std::ostringstream os;
        os << "direction must be a unit vector (|e| = " << n << ")";
        throw DomainError(os.str());
    }
    return e / n;
}

}  // namespace nullvar
