#pragma once

// Balanced domains and their geometry: volume, diameter, inradius, support
// half-breadth, chord function ν_e and the ring functions η, α, ζ.

#include <algorithm>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "nullvar/vec2.hpp"

namespace nullvar {

/// F(θ) = Σ_m p_m cos 2mθ + q_m sin 2mθ, m = 1..modes(). π-periodic and
/// zero-mean by construction.
struct RadialProfile {
    static constexpr int kMaxModes = 16;

    std::vector<double> p;  // p[m-1] multiplies cos 2mθ
    std::vector<double> q;  // q[m-1] multiplies sin 2mθ

    int modes() const { return static_cast<int>(std::max(p.size(), q.size())); }
    double cosCoeff(int m) const { return m >= 1 && m <= int(p.size()) ? p[m - 1] : 0.0; }
    double sinCoeff(int m) const { return m >= 1 && m <= int(q.size()) ? q[m - 1] : 0.0; }

    double operator()(double theta) const;
    double derivative(double theta) const;
    double secondDerivative(double theta) const;
    /// Σ |coefficients|, an upper bound for max |F|.
    double l1Norm() const;
    bool isZero() const;

    /// G(θ) = F(θ + phi).
    RadialProfile rotated(double phi) const;
    RadialProfile scaled(double s) const;

    /// a·cos 2mθ + b·sin 2mθ
    static RadialProfile mode(int m, double a, double b = 0.0);
};

/// ζ̃ = 1 on [0, 1-δ], 1/2 on (1-δ, 1], a on (1, 1+δ̃], 0 beyond.
struct ZetaProfile {
    double deltaTilde = 0.2;
    double delta = 0.05;
    double a = 0.0;

    double operator()(double r) const;
};

namespace shape {

struct Ball {
    int dim = 2;
    double radius = 1.0;
};

/// Axis-parallel box [-h_1, h_1] × ... × [-h_d, h_d].
struct Rectangle {
    std::vector<double> halfSides;
};

/// Counter-clockwise, strictly convex, centrally symmetric.
struct ConvexPolygon {
    std::vector<Vec2> vertices;
};

/// 0 ≤ r ≤ scale·(1 + ε F(θ)).
struct StarShaped {
    RadialProfile profile;
    double epsilon = 0.0;
    double scale = 1.0;
};

/// n-fold spiky domain whose angular width at radius r is 2π ζ̃(r/scale)/n.
struct Spiky {
    int n = 64;
    ZetaProfile zeta;
    double scale = 1.0;
};

/// One-dimensional union of [±w_j - 1/2, ±w_j + 1/2].
struct IntervalUnion {
    std::vector<double> centers;
    static constexpr double kHalfWidth = 0.5;
};

/// {x ∈ R³ : |x_1| + α·|(x_2, x_3)| < 1}.
struct RevolutionBody {
    double alpha = 1.0;
};

}  // namespace shape

using DomainSpec = std::variant<shape::Ball, shape::Rectangle, shape::ConvexPolygon, shape::StarShaped,
                                shape::Spiky, shape::IntervalUnion, shape::RevolutionBody>;

// Validating constructors; each throws InvalidDomain on violated invariants.
DomainSpec makeBall(int dim, double radius);
DomainSpec makeRectangle(std::vector<double> halfSides);
DomainSpec makeConvexPolygon(std::vector<Vec2> vertices);
DomainSpec makeStarShaped(RadialProfile profile, double epsilon, double scale = 1.0);
DomainSpec makeSpiky(int n, ZetaProfile zeta, double scale = 1.0);
DomainSpec makeIntervalUnion(std::vector<double> centers);
DomainSpec makeRevolutionBody(double alpha);

/// Regular polygon with 2·halfCount vertices on the circle of the given radius.
DomainSpec makeRegularPolygon(int halfCount, double radius, double rotation = 0.0);

void validate(const DomainSpec& spec);
std::string typeName(const DomainSpec& spec);
int dimension(const DomainSpec& spec);
bool isPlanar(const DomainSpec& spec);
/// Planar and star-shaped with respect to the origin (ball, rectangle,
/// polygon, star-shaped, spiky).
bool isPlanarStar(const DomainSpec& spec);

/// Homothety by s > 0.
DomainSpec scaled(const DomainSpec& spec, double s);

/// Polygon vertices of a planar rectangle or polygon spec.
std::vector<Vec2> polygonVertices(const DomainSpec& spec);

double volume(const DomainSpec& spec);

/// Boundary radius in direction theta for planar star-shaped specs.
double radialBoundary(const DomainSpec& spec, double theta);

/// max over x ∈ Ω of x·e for planar specs (and along the axis for 1D/3D bodies).
double supportHalfBreadth(const DomainSpec& spec, Vec2 e);

struct GeometricDescriptors {
    double volume = 0.0;
    double diameter = 0.0;
    double rMinus = 0.0;  ///< inradius (min_e w(e) for convex balanced)
    double rPlus = 0.0;   ///< max_e w(e) = D/2
    std::function<double(Vec2)> halfBreadth;
    std::function<double(double)> radial;  ///< empty unless planar star-shaped
};

GeometricDescriptors descriptors(const DomainSpec& spec);

struct RingValues {
    double eta = 0.0;
    double alpha = 0.0;
    double zeta = 0.0;
};

/// η(r), α(r), ζ(r) for planar star-shaped specs.
RingValues ringFunctions(const DomainSpec& spec, double r);

/// Radii at which η is not smooth (edge distances, vertex radii, extrema of R).
std::vector<double> ringBreakpoints(const DomainSpec& spec);

/// Length of Ω ∩ {x·e = t}; convex planar specs only.
double chordWidth(const DomainSpec& spec, Vec2 e, double t);

struct ConvexityReport {
    bool convex = false;
    bool balanced = false;
    bool indeterminate = false;  ///< curvature test within tolerance of zero
    double minCurvatureMeasure = 0.0;
};

ConvexityReport checkConvexBalanced(const DomainSpec& spec);

/// Angular pieces of a spiky domain: radius `r` on [theta0, theta1].
struct Arc {
    double theta0;
    double theta1;
    double r;
};
std::vector<Arc> spikyArcs(const shape::Spiky& s);

/// Unit vector check used by direction-taking operations.
Vec2 requireUnit(Vec2 e);

}  // namespace nullvar
