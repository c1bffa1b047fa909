#pragma once

// First-order behaviour of √λ₂ and κ under balanced deformations
// r = 1 + εF(θ) of the unit disk.

#include <Eigen/Core>
#include <random>

#include "nullvar/domain.hpp"

namespace nullvar::perturb {

struct Lambda2Derivative {
    double dSqrtLambda2 = 0.0;  ///< −(j₁₁/2π)|∫₀^{2π} F e^{2iθ}|
    double dLambda2 = 0.0;      ///< smaller eigenvalue of M
    /// m_ij = −∫₀^{2π} ∂ₙu_i ∂ₙu_j F dθ for u = N J₁(j₁₁r){cos θ, sin θ}.
    Eigen::Matrix2d M = Eigen::Matrix2d::Zero();
};

Lambda2Derivative lambda2Derivative(const RadialProfile& F);

struct KappaDerivative {
    double value = 0.0;  ///< min over α of −(j₁₁/(2πJ₀(j₁₁))) ∫₀^{2π} F(θ+α) cos(j₁₁ cos θ) dθ
    double alpha = 0.0;  ///< minimising base-point angle
    double modeFormula = 0.0;  ///< the same minimum from the Bessel mode expansion
};

/// Grid of 2048 angles on [0, π) plus local refinement; trapezoid with 4096 nodes.
KappaDerivative kappaDerivative(const RadialProfile& F);

/// Angle φ such that F(θ + φ) has zero sin 2θ coefficient and a non-negative
/// cos 2θ coefficient.
struct Rotation {
    double phi = 0.0;
    RadialProfile rotated;
};
Rotation rotateCanonical(const RadialProfile& F);

/// A = −J₀(j₁₁).
double constantA();

/// L_F = min_α ∫₀^π F(θ+α) cos(j₁₁ cos θ) dθ and R_F = −A|∫₀^π F e^{2iθ} dθ|.
struct P1 {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds() const { return lhs <= rhs + 1e-9; }
};
P1 inequalityP1(const RadialProfile& F);

struct FiniteDifference {
    double eps = 0.0;
    double kappa0 = 0.0, kappaEps = 0.0;
    double sqrtLambda0 = 0.0, sqrtLambdaEps = 0.0;
    double kappaQuotient = 0.0;
    double sqrtLambdaQuotient = 0.0;
    double kappaPredicted = 0.0;
    double sqrtLambdaPredicted = 0.0;
};

/// One-sided quotients (q(ε) − q(0))/ε for κ and √λ₂ of r = 1 + εF,
/// both ends computed by the same solvers.
FiniteDifference finiteDifferenceCheck(const RadialProfile& F, double eps, unsigned workers = 1);

struct PerturbationReport {
    double dSqrtLambda2 = 0.0;
    double dKappa = 0.0;
    double lhsP1 = 0.0;
    double rhsP1 = 0.0;
    double rotationAngle = 0.0;
};
PerturbationReport perturbationReport(const RadialProfile& F);

/// Coefficients uniform in [−1, 1] on 1..maxModes modes.
RadialProfile randomProfile(std::mt19937_64& rng, int maxModes = 8);

}  // namespace nullvar::perturb
