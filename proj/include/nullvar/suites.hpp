#pragma once

// Verification suites and the per-domain check builders they share with the
// acceptance run.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nullvar/check.hpp"
#include "nullvar/domain.hpp"
#include "nullvar/report.hpp"
#include "nullvar/spectrum.hpp"

namespace nullvar {

struct SuiteOptions {
    std::uint64_t seed = 1;
    int count = 100;       ///< domains per family (conjectures, theorems) or random profiles (perturbation)
    int resolution = 720;  ///< directions for κ and for the spiky certificate
    unsigned workers = 1;
};

extern const std::vector<std::string> kSuiteNames;  // tables, conjectures, theorems, perturbation, counterexamples

/// Throws std::invalid_argument for an unknown suite name.
VerificationReport runSuite(const std::string& name, const SuiteOptions& opt);

VerificationReport tablesSuite();
VerificationReport conjecturesSuite(const SuiteOptions& opt);
VerificationReport theoremsSuite(const SuiteOptions& opt);
VerificationReport perturbationSuite(const SuiteOptions& opt);
VerificationReport counterexamplesSuite(const SuiteOptions& opt);

/// κ of the planar ball with the same area.
double kappaOfEqualAreaDisk(const DomainSpec& spec);

/// κ ≤ (2j01/j11)·κ(Ω*), κ ≤ 4π/D and, over `directions` sampled directions,
/// the worst case of κ_j(e) ≤ π(j+1)/w(e) for j = 1..4.
std::vector<Check> kappaBoundChecks(const DomainSpec& spec, double kappa, int directions = 8);

/// κ ≤ κ(Ω*), κ ≤ √λ₂, κ ≤ 2√λ₁ and the λ₂ accuracy requirement. The
/// comparison with √λ₂ passes only when its margin exceeds the combined error
/// of κ and √λ₂. `dirichlet` holds at least two values.
std::vector<Check> conjectureChecks(const DomainSpec& spec, double kappa, const SpectrumResult& dirichlet);

/// κ ≥ 2√μ₂ within the combined solver error (equality for rectangles).
Check neumannCheck(double kappa, const SpectrumResult& neumann);

/// η non-increasing and α concave on [r−, r+], sampled second differences.
std::vector<Check> ringChecks(const DomainSpec& spec, int samples = 200);

/// One row of a sweep; failures are recorded in `error` and the row kept.
struct SweepRow {
    std::string label;
    double parameter = 0.0;
    std::optional<double> kappa, kappaBall, lambda1, lambda2, mu2;
    double diameter = 0.0, rMinus = 0.0;
    std::vector<Check> checks;
    std::string error;
};

SweepRow sweepRow(const std::string& label, double parameter, const DomainSpec& spec, int resolution);
Table sweepTable(const std::vector<SweepRow>& rows);

}  // namespace nullvar
