#pragma once

// Tolerances used by the verification suites and the acceptance run.

namespace nullvar {

struct Tolerances {
    double closedForm = 1e-8;    ///< published constants, closed-form κ
    double eigenSolver = 1e-4;   ///< relative, collocation eigenvalues
    double quadratureFT = 1e-7;  ///< quadrature-based transforms and κ
    double eigenCompare = 1e-3;  ///< relative, collocation vs closed form (disk, rectangle)
    double closedFormEigen = 1e-10;
    double keyQuadrature = 1e-9;  ///< closed form vs quadrature of α_approx·J₁
    double analyticDerivative = 1e-6;
    double fdKappa = 1e-2;
    double fdSqrtLambda = 5e-2;
    double p1Margin = 1e-9;
    double triangle = 1e-6;
    double bracket = 1e-8;  ///< directional root bracket and diameter bound
};

inline const Tolerances& tolerances() {
    static const Tolerances t;
    return t;
}

}  // namespace nullvar
