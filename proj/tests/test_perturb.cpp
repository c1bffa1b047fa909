#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/trapezoidal.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "nullvar/errors.hpp"
#include "nullvar/perturb.hpp"

using namespace nullvar;
using namespace nullvar::perturb;
constexpr double pi = std::numbers::pi;

namespace {
constexpr double j11 = 3.831705970207512;
double J(int n, double x) { return boost::math::cyl_bessel_j(n, x); }

double integrate(const std::function<double(double)>& f, double a, double b) {
    return boost::math::quadrature::trapezoidal(f, a, b, 1e-13);
}
}  // namespace

TEST_CASE("lambda2 derivative") {
    const auto c2 = lambda2Derivative(RadialProfile::mode(1, 1.0));
    CHECK(c2.dSqrtLambda2 == doctest::Approx(-j11 / 2));
    CHECK(c2.dLambda2 == doctest::Approx(-j11 * j11));
    CHECK(c2.M(0, 0) == doctest::Approx(-j11 * j11));
    CHECK(c2.M(1, 1) == doctest::Approx(j11 * j11));
    CHECK(std::fabs(c2.M(0, 1)) < 1e-12);
    CHECK(lambda2Derivative(RadialProfile::mode(1, 0.0, 1.0)).dSqrtLambda2 == doctest::Approx(-j11 / 2));
    CHECK(lambda2Derivative(RadialProfile::mode(2, 1.0)).dSqrtLambda2 == 0.0);
    // the eigenvalue route agrees with the modulus formula
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const auto F = randomProfile(rng);
        const auto d = lambda2Derivative(F);
        CHECK(d.dLambda2 / (2 * j11) == doctest::Approx(d.dSqrtLambda2).epsilon(1e-12));
    }
}

TEST_CASE("kappa derivative") {
    const auto c2 = kappaDerivative(RadialProfile::mode(1, 1.0));
    CHECK(c2.value == doctest::Approx(-j11).epsilon(1e-10));
    CHECK(std::min(c2.alpha, pi - c2.alpha) < 1e-6);
    CHECK(kappaDerivative(RadialProfile{}).value == 0.0);
    const auto c4 = kappaDerivative(RadialProfile::mode(2, 1.0));
    CHECK(c4.value == doctest::Approx(-j11 * std::fabs(J(4, j11) / J(0, j11))).epsilon(1e-10));
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        const auto F = randomProfile(rng);
        const auto k = kappaDerivative(F);
        CHECK(k.value == doctest::Approx(k.modeFormula).epsilon(1e-10));
        CHECK(k.value < 0);
        CHECK(k.value < lambda2Derivative(F).dSqrtLambda2);
    }
}

TEST_CASE("canonical rotation") {
    const auto s = rotateCanonical(RadialProfile::mode(1, 0.0, 1.0));
    CHECK(s.phi == doctest::Approx(pi / 4));
    CHECK(s.rotated.cosCoeff(1) == doctest::Approx(1.0));
    CHECK(std::fabs(s.rotated.sinCoeff(1)) < 1e-15);
    CHECK(rotateCanonical(RadialProfile::mode(1, 1.0)).phi == 0.0);
    const auto c4 = rotateCanonical(RadialProfile::mode(2, 1.0));
    CHECK(c4.rotated.cosCoeff(1) >= 0.0);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 20; ++i) {
        const auto F = randomProfile(rng);
        const double phi = rotateCanonical(F).phi;
        auto G = [&](double t) { return F(t + phi); };
        const double sn = integrate([&](double t) { return G(t) * std::sin(2 * t); }, 0, 2 * pi);
        const double cs = integrate([&](double t) { return G(t) * std::cos(2 * t); }, 0, 2 * pi);
        CHECK(std::fabs(sn) < 1e-10);
        CHECK(cs >= -1e-10);
    }
}

TEST_CASE("inequality p1") {
    const auto c2 = inequalityP1(RadialProfile::mode(1, 1.0));
    CHECK(c2.lhs == doctest::Approx(pi * J(0, j11)).epsilon(1e-10));
    CHECK(c2.rhs == doctest::Approx(J(0, j11) * pi / 2).epsilon(1e-12));
    CHECK(c2.holds());
    CHECK(constantA() == doctest::Approx(0.40276).epsilon(1e-4));
    const auto c6 = inequalityP1(RadialProfile{{0.0, 0.7}, {0.0, 0.0, -0.3}});
    CHECK(c6.rhs == 0.0);
    CHECK(c6.lhs <= 0.0);
    const auto three = inequalityP1(RadialProfile::mode(1, 3.0));
    CHECK(three.lhs == doctest::Approx(3 * c2.lhs));
    CHECK(three.rhs == doctest::Approx(3 * c2.rhs));
    std::mt19937_64 rng(29);
    for (int i = 0; i < 200; ++i) CHECK(inequalityP1(randomProfile(rng)).holds());
}

TEST_CASE("finite differences") {
    const auto d = finiteDifferenceCheck(RadialProfile::mode(1, 1.0), 1e-3);
    CHECK(d.kappa0 == doctest::Approx(j11).epsilon(1e-10));
    CHECK(std::fabs(d.kappaQuotient + j11) <= 1e-2);
    CHECK(std::fabs(d.sqrtLambdaQuotient + j11 / 2) <= 5e-2);
    const auto z = finiteDifferenceCheck(RadialProfile{}, 1e-3);
    CHECK(z.kappaQuotient == 0.0);
    CHECK(z.sqrtLambdaQuotient == 0.0);
    CHECK_THROWS_AS(finiteDifferenceCheck(RadialProfile::mode(1, 1.0), 0.0), DomainError);
}
