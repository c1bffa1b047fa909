#include "nullvar/perturb.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/tools/minima.hpp>

#include "nullvar/corpus.hpp"
#include "nullvar/errors.hpp"
#include "nullvar/null_variety.hpp"
#include "nullvar/special.hpp"
#include "nullvar/spectrum.hpp"

namespace nullvar::perturb {

namespace {

constexpr double kPi = std::numbers::pi;
// Nodes on [0, π); both F(θ+α) and cos(j₁₁cos θ) are π-periodic, so this is
// the 4096-node rule on [0, 2π) halved.
constexpr int kNodes = 2048;

double j11() { return special::constants::j11(); }

// ∫₀^π F(θ+α) cos(j₁₁ cos θ) dθ by the periodic trapezoid rule
double shiftedIntegral(const RadialProfile& F, double alpha) {
    const double h = kPi / kNodes;
    double s = 0.0;
    for (int i = 0; i < kNodes; ++i) {
        const double t = h * i;
        s += F(t + alpha) * std::cos(j11() * std::cos(t));
    }
    return h * s;
}

// ∫₀^π F e^{2iθ} dθ = (π/2)(a₁ + i b₁)
std::complex<double> twoMode(const RadialProfile& F) { return 0.5 * kPi * std::complex<double>(F.cosCoeff(1), F.sinCoeff(1)); }

struct Minimum {
    double value;
    double at;
};

// Minimum over α ∈ [0, π) of a π-periodic function sampled on the node grid,
// refined by Brent around the best sample.
template <class G>
Minimum minimizePeriodic(const std::vector<double>& samples, G&& g) {
    const int n = static_cast<int>(samples.size());
    const double h = kPi / n;
    const int k = static_cast<int>(std::min_element(samples.begin(), samples.end()) - samples.begin());
    const auto r = boost::math::tools::brent_find_minima(g, (k - 1) * h, (k + 1) * h, 50);
    Minimum m{r.second, r.first};
    if (samples[k] < m.value) m = {samples[k], k * h};
    m.at = std::fmod(m.at + kPi, kPi);
    return m;
}

// L_F with its minimising angle
Minimum lhsMinimum(const RadialProfile& F) {
    const double h = kPi / kNodes;
    std::vector<double> f(kNodes), w(kNodes), g(kNodes, 0.0);
    for (int i = 0; i < kNodes; ++i) {
        f[i] = F(h * i);
        w[i] = std::cos(j11() * std::cos(h * i));
    }
    // g(α_k) = h Σ_i F(θ_i + θ_k) w_i, a circular correlation on the node grid
    for (int k = 0; k < kNodes; ++k) {
        double s = 0.0;
        for (int i = 0; i < kNodes; ++i) s += f[(i + k) % kNodes] * w[i];
        g[k] = h * s;
    }
    return minimizePeriodic(g, [&](double a) { return shiftedIntegral(F, a); });
}

// The same minimum from ∫₀^π F(θ+α)cos(j₁₁cosθ)dθ = π Σ (−1)^m J_{2m}(j₁₁)(a_m cos 2mα + b_m sin 2mα)
Minimum lhsModes(const RadialProfile& F) {
    std::vector<double> c(F.modes() + 1);
    for (int m = 1; m <= F.modes(); ++m) c[m] = (m % 2 ? -1.0 : 1.0) * special::besselJ(2 * m, j11());
    auto g = [&](double a) {
        double s = 0.0;
        for (int m = 1; m <= F.modes(); ++m) s += c[m] * (F.cosCoeff(m) * std::cos(2 * m * a) + F.sinCoeff(m) * std::sin(2 * m * a));
        return kPi * s;
    };
    std::vector<double> samples(kNodes);
    for (int k = 0; k < kNodes; ++k) samples[k] = g(kPi * k / kNodes);
    return minimizePeriodic(samples, g);
}

}  // namespace

double constantA() { return -special::besselJ(0, j11()); }

Lambda2Derivative lambda2Derivative(const RadialProfile& F) {
    Lambda2Derivative out;
    // ∂ₙu₂ = −j₁₁√(2/π) cos θ, ∂ₙu₃ = −j₁₁√(2/π) sin θ on r = 1; the normal
    // speed of r = 1 + εF is F. Integrands are trigonometric polynomials of
    // degree ≤ 2·modes + 2, so 4·modes + 8 trapezoid nodes are exact.
    const int n = 4 * F.modes() + 8;
    const double h = 2 * kPi / n;
    const double k = 2 * j11() * j11() / kPi;
    for (int i = 0; i < n; ++i) {
        const double t = h * i, f = F(t), c = std::cos(t), s = std::sin(t);
        out.M(0, 0) -= k * f * c * c * h;
        out.M(0, 1) -= k * f * c * s * h;
        out.M(1, 1) -= k * f * s * s * h;
    }
    out.M(1, 0) = out.M(0, 1);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(out.M, Eigen::EigenvaluesOnly);
    out.dLambda2 = es.eigenvalues()(0);
    out.dSqrtLambda2 = -(j11() / kPi) * std::abs(twoMode(F));
    return out;
}

KappaDerivative kappaDerivative(const RadialProfile& F) {
    KappaDerivative out;
    if (F.isZero()) return out;
    // −j₁₁/(2πJ₀(j₁₁)) > 0 and the [0, 2π) integral is twice the [0, π) one
    const double factor = j11() / (kPi * constantA());
    const auto m = lhsMinimum(F);
    out.value = factor * m.value;
    out.alpha = m.at;
    out.modeFormula = factor * lhsModes(F).value;
    return out;
}

Rotation rotateCanonical(const RadialProfile& F) {
    Rotation r;
    const double a = F.cosCoeff(1), b = F.sinCoeff(1);
    // a cos 2θ + b sin 2θ = R cos(2θ − 2φ); rotating by φ leaves R cos 2θ
    r.phi = (a == 0.0 && b == 0.0) ? 0.0 : 0.5 * std::atan2(b, a);
    r.rotated = F.rotated(r.phi);
    return r;
}

P1 inequalityP1(const RadialProfile& F) {
    P1 p;
    if (F.isZero()) return p;
    p.lhs = lhsMinimum(F).value;
    p.rhs = -constantA() * std::abs(twoMode(F));
    return p;
}

FiniteDifference finiteDifferenceCheck(const RadialProfile& F, double eps, unsigned workers) {
    if (!(eps > 0.0)) throw DomainError("finiteDifferenceCheck: eps must be positive");
    FiniteDifference d;
    d.eps = eps;
    d.kappaPredicted = kappaDerivative(F).value;
    d.sqrtLambdaPredicted = lambda2Derivative(F).dSqrtLambda2;
    if (F.isZero()) return d;
    const auto base = makeStarShaped(F, 0.0);
    const auto pert = makeStarShaped(F, eps);  // validates 1 + εF > 0 and convexity
    KappaOptions ko;
    ko.workers = workers;
    EigenOptions eo;
    eo.count = 3;
    eo.workers = workers;
    eo.forceCollocation = true;
    d.kappa0 = kappa(base, ko).kappa.value();
    d.kappaEps = kappa(pert, ko).kappa.value();
    d.sqrtLambda0 = std::sqrt(dirichletEigs(base, eo).values[1]);
    d.sqrtLambdaEps = std::sqrt(dirichletEigs(pert, eo).values[1]);
    d.kappaQuotient = (d.kappaEps - d.kappa0) / eps;
    d.sqrtLambdaQuotient = (d.sqrtLambdaEps - d.sqrtLambda0) / eps;
    return d;
}

PerturbationReport perturbationReport(const RadialProfile& F) {
    PerturbationReport r;
    r.dSqrtLambda2 = lambda2Derivative(F).dSqrtLambda2;
    r.dKappa = kappaDerivative(F).value;
    const auto p = inequalityP1(F);
    r.lhsP1 = p.lhs;
    r.rhsP1 = p.rhs;
    r.rotationAngle = rotateCanonical(F).phi;
    return r;
}

RadialProfile randomProfile(std::mt19937_64& rng, int maxModes) {
    if (maxModes < 1 || maxModes > RadialProfile::kMaxModes) throw DomainError("randomProfile: maxModes out of range");
    const int m = 1 + std::min(maxModes - 1, static_cast<int>(uniform01(rng) * maxModes));
    RadialProfile F;
    for (int i = 0; i < m; ++i) {
        F.p.push_back(2 * uniform01(rng) - 1);
        F.q.push_back(2 * uniform01(rng) - 1);
    }
    return F;
}

}  // namespace nullvar::perturb
