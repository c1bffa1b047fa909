#pragma once

// Non-convex constructions: the spiky domain with κ > j₁₁ at area π, and
// unions of unit intervals with κ·vol as large as desired.

#include <cstdint>
#include <string>
#include <vector>

#include "nullvar/domain.hpp"

namespace nullvar::counterex {

/// ζ̃ with a = δ(2 − δ)/(2δ̃(2 + δ̃)), the value making ∫ r(ζ̃ − ζ₀) dr = 0.
/// Throws DomainError unless 0 < δ < δ̃ < 1 and a ≤ 1/2.
ZetaProfile buildZeta(double deltaTilde, double delta);

/// l(γ) = ∫₀^∞ r ζ̃(r) J₀(γr) dr in closed form.
double zetaTransform(const ZetaProfile& z, double gamma);
/// l′(γ) = −∫₀^∞ r² ζ̃(r) J₁(γr) dr.
double zetaTransformDerivative(const ZetaProfile& z, double gamma);

struct ZetaPositivity {
    double minimum = 0.0;  ///< min of l over the grid and γ = gammaMax
    double atGamma = 0.0;
    double l0 = 0.0;       ///< l(0) = ∫ r ζ̃ dr
    bool decreasing = true;  ///< l′ < 0 at every interior grid point
    bool positive() const { return minimum > 0.0; }
};

ZetaPositivity zetaPositivity(const ZetaProfile& z, double gammaMax = 0.0, int gridSize = 512);

/// δ = δ̃/4, δ̃/8, ... until l(j₁₁) > 0 on the grid. Throws NumericalFailure
/// after 40 halvings.
ZetaProfile chooseDelta(double deltaTilde);

/// Ω_n for even n ≥ 8 (InvalidDomain otherwise).
DomainSpec spikyDomain(int n, const ZetaProfile& z);

struct SpikyReport {
    int n = 0;
    int directions = 0;
    int radii = 0;
    double gammaMax = 0.0;
    double minimum = 0.0;  ///< min of ∫_Ω cos(γ x·e) dx over the grid
    double minAngle = 0.0;
    double minGamma = 0.0;
    double limitGap = 0.0;  ///< max |∫_Ω cos(γ x·e) − 2π l(γ)| over the grid
    bool pass() const { return minimum > 0.0; }
};

/// Directions φ_i = iπ/directions, γ_k = k·gammaMax/radii (k = 1..radii).
/// gammaMax = 0 selects j₁₁.
SpikyReport verifySpiky(int n, const ZetaProfile& z, double gammaMax = 0.0, int directions = 720, int radii = 512,
                        unsigned workers = 1);

struct NazarovInstance {
    int n = 0;  ///< candidate frequencies 1..n
    double C = 0.0;
    std::uint64_t seed = 0;
    int attempts = 0;
    std::vector<int> w;       ///< chosen frequencies, increasing
    double gridStep = 0.0;    ///< grid on [0, C/n] (f is even)
    double gridMinimum = 0.0;
    double derivativeBound = 0.0;  ///< Σ w_j ≥ |f′|
    double certifiedMinimum = 0.0;  ///< gridMinimum − (gridStep/2)·Σ w_j
    bool certified() const { return certifiedMinimum > 0.0; }
};

/// f(ξ) = Σ cos(w_j ξ).
double nazarovF(const std::vector<int>& w, double xi);
/// G(x) = 1 + 2 Σ_{k=1}^{n} (1 − k/n)² cos(kx).
double nazarovG(int n, double x);

/// Grid certificate of f > 0 on [−C/n, C/n] with `points` grid steps.
NazarovInstance certify(std::vector<int> w, int n, double C, int points = 10000);

/// Draws a_k ~ Bernoulli((1 − k/n)²) for n = 32, 64, ... (up to 2^20), three
/// draws per n, until the certificate succeeds. Throws NumericalFailure when
/// the budget is exhausted.
NazarovInstance nazarovSearch(double C, std::uint64_t seed);

struct IntervalUnionBound {
    double kappaLowerBound = 0.0;  ///< C/n
    double volume = 0.0;           ///< 2·count
    double product = 0.0;          ///< lower bound on κ·vol
};

/// Requires a certified instance with C/n < 2π (DomainError otherwise).
IntervalUnionBound intervalUnionKappa(const NazarovInstance& inst);

/// χ̂ of I × I at (ξ₁, ξ₂) as the product of the 1D factors.
double productTransform(const std::vector<int>& w, double xi1, double xi2);

}  // namespace nullvar::counterex
