#pragma once

// Dirichlet and Neumann Laplacian eigenvalues of planar balanced domains:
// closed forms for disks and rectangles, the method of particular solutions
// otherwise, and the eigenvalue inequalities relating them to κ(Ω).

#include <string>
#include <vector>

#include "nullvar/check.hpp"
#include "nullvar/domain.hpp"

namespace nullvar {

enum class Boundary { Dirichlet, Neumann };

struct SpectrumResult {
    std::vector<double> values;    ///< ascending; for Neumann values[0] = 0
    std::vector<double> accuracy;  ///< relative error estimate per value
    /// cluster[i] = index of the first member of the degenerate cluster
    /// (relative gap 1e-6) that contains value i.
    std::vector<int> cluster;
    std::string method;  ///< "closed-form" or "collocation"
};

struct EigenOptions {
    int count = 6;           ///< at most 10
    int basisOrder = 24;     ///< angular orders per symmetry class
    int cornerTerms = 8;     ///< fractional-order terms per polygon corner
    int boundaryPoints = 256;
    bool forceCollocation = false;  ///< use the solver even where a closed form exists
    unsigned workers = 1;
};

/// Lowest eigenvalues for Ball(d = 2), Rectangle (any d, closed form),
/// convex StarShaped and ConvexPolygon specs. Throws UnsupportedDomain for
/// other types and NumericalFailure if the collocation does not converge.
SpectrumResult dirichletEigs(const DomainSpec& spec, const EigenOptions& opt = {});
SpectrumResult neumannEigs(const DomainSpec& spec, const EigenOptions& opt = {});
SpectrumResult eigenvalues(const DomainSpec& spec, Boundary bc, const EigenOptions& opt = {});

/// Smallest and second smallest singular value of the boundary block of the
/// orthonormalised collocation matrix at frequency k = √λ (parity 0: even
/// eigenfunctions, 1: odd). Exposed for diagnostics.
struct SubspaceAngle {
    double sigma1;
    double sigma2;
};
SubspaceAngle collocationSigma(const DomainSpec& spec, Boundary bc, int parity, double k,
                               const EigenOptions& opt = {});

using InequalityCheck = Check;

struct InequalityReport {
    double kappa = 0.0;
    double maxKappa1 = 0.0;
    SpectrumResult dirichlet;
    SpectrumResult neumann;
    std::vector<InequalityCheck> checks;
    bool allPass() const;
};

/// κ ≥ √μ₂, κ ≥ 2√μ₂, μ_{n+1} < λ_n (n ≤ 5), max_e κ₁(e) ≥ √μ₃ and
/// μ_{n+2} ≤ λ_n whenever κ ≤ 2√λ_n. Checks pass when the margin exceeds
/// minus the combined solver error.
InequalityReport inequalityChecks(const DomainSpec& spec, const EigenOptions& opt = {});

}  // namespace nullvar
