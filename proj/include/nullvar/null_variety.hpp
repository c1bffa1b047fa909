#pragma once

// Real zeros of the directional transform: κ_j(e), κ(Ω) = inf_e κ₁(e), the
// first null curve N₁ and the right-triangle example.

#include <optional>
#include <utility>
#include <vector>

#include "nullvar/domain.hpp"
#include "nullvar/fourier.hpp"

namespace nullvar {

struct RootOptions {
    /// Search interval (0, bound]; 0 selects the default (2π/w(e) for convex
    /// planar domains, 8π/w(e) otherwise).
    double bound = 0.0;
    /// Uniform scan steps over the interval; 0 selects 128 for convex planar
    /// domains and 2048 otherwise.
    int steps = 0;
};

struct RootResult {
    bool found = false;       ///< false means "no zero in (0, bound]"
    double value = 0.0;       ///< the root when found
    double bound = 0.0;       ///< the searched bound
    bool tangential = false;  ///< double root detected as a dip without sign change
};

/// κ₁(e).
RootResult firstRoot(const DomainSpec& spec, Vec2 e, RootOptions opt = {});
RootResult firstRoot(const DirectionalTransform& T, double bound, int steps);

/// Roots in (0, bound] with multiplicity (a tangential zero is listed twice),
/// at most maxCount of them.
std::vector<double> directionalRoots(const DirectionalTransform& T, double bound, int steps, int maxCount);

struct NullVarietyResult {
    std::optional<double> kappa;  ///< empty: no zero below searchBound in any sampled direction
    double argminAngle = 0.0;
    /// (angle, κ₁) on the direction grid; κ₁ is +∞ where the search exceeded its bound.
    std::vector<std::pair<double, double>> perDirection;
    double searchBound = 0.0;
    bool closedForm = false;
};

struct KappaOptions {
    int resolution = 720;  ///< directions on [0, π)
    double bound = 0.0;    ///< 0: per-direction default
    int steps = 0;         ///< 0: default scan density
    unsigned workers = 1;
    bool refine = true;    ///< golden-section refinement to 1e-6 in angle
};

/// κ(Ω). Closed forms for balls and boxes of any dimension; direction sweep for
/// planar domains; the axis search for interval unions. Throws
/// UnsupportedDomain for bodies of revolution.
NullVarietyResult kappa(const DomainSpec& spec, const KappaOptions& opt = {});

struct NullCurve {
    std::vector<std::pair<double, double>> points;  ///< (angle, κ₁(e)) on [0, π)
    double maxKappa1 = 0.0;
    double minKappa1 = 0.0;
};

/// Samples of N₁ for convex balanced planar domains.
NullCurve nullCurve(const DomainSpec& spec, int resolution = 720, unsigned workers = 1);

/// κ(T_{1,a}) = 2π√(1 + a⁻²) for the right triangle with legs 1 and a.
double triangleKappa(double a);

struct TriangleZero {
    double kappa;  ///< smallest |ξ| among certified zeros
    Vec2 xi;
    double residual;  ///< |χ̂(ξ)| at the reported zero
};

/// Independent search for the smallest zero of the complex transform of
/// T_{1,a}: polar grid of |χ̂|² minima, then 2D Newton on (Re χ̂, Im χ̂).
TriangleZero triangleKappaSearch(double a);

}  // namespace nullvar
