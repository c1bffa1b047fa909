#pragma once

// Fourier transform of characteristic functions, χ̂(ξ) = ∫_Ω e^{-iξ·x} dx.
// For balanced domains this is the real integral ∫_Ω cos(ξ·x) dx.

#include <complex>
#include <memory>
#include <vector>

#include "nullvar/domain.hpp"
#include "nullvar/vec2.hpp"

namespace nullvar {

/// χ̂ of the d-ball of the given radius at |ξ| = rho.
double ftBall(int dim, double radius, double rho);

/// χ̂ of the box with the given half-sides; xi has the same length.
double ftRectangle(const std::vector<double>& halfSides, const std::vector<double>& xi);

/// χ̂ of T_α along its axis: 4πα⁻²(ξ − sin ξ)/ξ³.
double ftRevolutionAxis(double alpha, double xi1);

/// χ̂ of an arbitrary simple polygon (counter-clockwise), by the edge sum
/// (i/|ξ|²) Σ (ξ·n_k)|e_k| e^{-iξ·m_k} sinc(ξ·(b_k − a_k)/2).
std::complex<double> ftPolygonComplex(const std::vector<Vec2>& vertices, Vec2 xi);

/// ∫₀^R cos(c r) r dr.
double radialCosineIntegral(double c, double R);

/// ρ ↦ χ̂(ρe) for a fixed domain and direction. Construction does the
/// direction-dependent precomputation (chord breakpoints, boundary samples).
class DirectionalTransform {
public:
    DirectionalTransform(const DomainSpec& spec, Vec2 e);
    ~DirectionalTransform();
    DirectionalTransform(DirectionalTransform&&) noexcept;
    DirectionalTransform& operator=(DirectionalTransform&&) noexcept;

    /// Full-accuracy value (target 1e-9·vol).
    double operator()(double rho) const;
    /// Cheaper value for scanning: for star-shaped domains the angular rule
    /// uses a node subset sized from the integrand bandwidth; identical to
    /// operator() for every other type.
    double scan(double rho) const;

    double halfBreadth() const;
    double volume() const;

    struct Impl;

private:
    std::unique_ptr<Impl> impl_;
};

/// χ̂(ρe). Dispatches to closed forms (ball, rectangle, interval union,
/// revolution body along its axis), the chord route for polygons, polar
/// quadrature for star-shaped domains and an angular harmonic expansion for
/// spiky domains. For 1D specs only e = (±1, 0) is meaningful.
double ftDirectional(const DomainSpec& spec, Vec2 e, double rho);

/// Star-shaped transform with an explicit trapezoid node count (convergence studies).
double ftStarPolar(const shape::StarShaped& s, Vec2 e, double rho, int nodes);

/// Spiky transform by Gauss–Legendre on every annular arc; independent of the
/// harmonic expansion used by ftDirectional, kept as a cross-check.
double ftSpikyArcs(const shape::Spiky& s, Vec2 e, double rho);

struct AveragedBessel {
    double direct;    ///< ∫₀^∞ η(r) J₀(r) dr
    double viaAlpha;  ///< vol·(∫₀^{r+} α J₁ dr + J₀(r+))
};

/// ∫_Ω J₀(|x|) dx by the two radial routes; throws NumericalFailure when they
/// disagree by more than 1e-8·vol.
AveragedBessel averagedBessel(const DomainSpec& spec);

}  // namespace nullvar
