#pragma once

// The planar argument for κ(Ω) ≤ √λ₁(Ω*): constants, the class A of ring
// functions α, the piecewise approximation α_approx and the integral bound
// ∫₀^{j₀₃} αJ₁ ≤ L·y₁₁ + M < 0, plus the pipeline applying it to a domain.

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nullvar/check.hpp"
#include "nullvar/domain.hpp"

namespace nullvar::machinery {

struct NamedValue {
    std::string name;
    double value;      ///< computed
    double published;  ///< 10-digit reference value
};

struct ProofConstants {
    double tau = 0.0;  ///< 2 j₀₁
    double yMin = 0.0;
    double L = 0.0;
    double M = 0.0;
    double finalEstimate = 0.0;  ///< L·yMin + M
    std::vector<NamedValue> tableHorizontal;
    std::vector<NamedValue> tableVertical;
};

const ProofConstants& constants();

/// a(r) = (τ² − r²)/(τ²(2π − r)), slope of the chord from (r, r²/τ²) to (2π, 1).
double chordSlope(double r);

/// The four-piece function r²/τ², y₁₁, v(r) = c·r + d, 1 on [0, j₀₃].
/// When r₋ ≥ j₁₁ the caller passes y₁₁ = j₁₁²/τ². Throws DomainError for r
/// outside [0, j₀₃].
double alphaApprox(double r, double y11);

/// c(y₁₁) = (1 − y₁₁)/(2π − j₁₁).
double slopeC(double y11);

/// L·y₁₁ + M.
double keyIntegral(double y11);
/// ∫₀^{j₀₃} α_approx J₁ by adaptive quadrature split at τ²/8, j₁₁, 2π.
double keyIntegralQuadrature(double y11);

/// 1 − (2π − j₁₁)·a(r₋) for r₋ ∈ [τ²/8, j₁₁].
double yMinBound(double rMinus);

/// Margin min over r ∈ [j₁₁, 2π] of r²/τ² − v(r) at y₁₁ = j₁₁²/τ², on a grid.
double r2AboveChordMargin(int samples = 2000);

/// A member of class A: α(r) = r²/τ² up to rMinus, the lower envelope of
/// affine pieces (slope, intercept) on [rMinus, rPlus], 1 beyond.
struct ClassAFunction {
    double rMinus = 0.0;
    double rPlus = 0.0;
    std::vector<std::pair<double, double>> lines;

    double operator()(double r) const;
    /// Corners of the envelope inside (rMinus, rPlus).
    std::vector<double> knots() const;
    /// Conditions (a)–(e) on a sampled grid.
    std::vector<Check> validate() const;
};

ClassAFunction randomClassA(std::mt19937_64& rng, int maxInteriorLines = 6);

/// ∫₀^{j₀₃} α J₁ with Gauss–Legendre panels split at every kink.
double classAIntegral(const ClassAFunction& a);

/// The four cosine moments of a non-increasing concave Z supported on [0, z]:
/// over [2πk, 2π(k+1)], [2π(k+½), 2π(k+3/2)], [2πk, 2π(k+½)], [2π(k+½), 2π(k+1)],
/// with prescribed signs ≤ 0, ≥ 0, ≥ 0, ≤ 0. Intervals leaving [0, z] are
/// reported as not applicable.
struct CosineMoments {
    double integrals[4] = {0, 0, 0, 0};
    bool preconditionHolds = true;  ///< monotone and concave on the sampled grid
    std::string precondition;       ///< which sampled condition failed
    std::vector<Check> checks;
    bool pass() const;
};

CosineMoments cosineMomentChecks(const std::function<double(double)>& Z, double z, int k);

/// j_{d/2,1} ≥ 2√π Γ(1 + d/2)^{1/d} for d = 1..dMax.
std::vector<Check> cuboidInequality(int dMax = 30);

struct PipelineReport {
    std::string branch;  ///< "class-A", "diameter" or "small-inradius"
    std::string note;
    double scale = 1.0;  ///< homothety to area 4π j₀₁²
    double diameter = 0.0;
    double rMinus = 0.0;
    double rPlus = 0.0;
    double y11 = 0.0;
    double integral = 0.0;     ///< ∫₀^{j₀₃} α J₁ after normalisation
    double keyBound = 0.0;     ///< keyIntegral(y₁₁)
    double averagedJ0 = 0.0;   ///< ∫_Ω J₀(|x|) dx after normalisation
    double kappa = 0.0;        ///< κ of the normalised domain
    std::vector<Check> checks;
    bool pass() const;
};

/// Planar convex balanced domains only (DomainError otherwise). Rescales to
/// area 4π j₀₁² and runs the branch that applies.
PipelineReport proofPipeline(const DomainSpec& spec, unsigned workers = 1);

}  // namespace nullvar::machinery
