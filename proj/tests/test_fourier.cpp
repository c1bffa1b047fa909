#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nullvar/domain.hpp"
#include "nullvar/errors.hpp"
#include "nullvar/fourier.hpp"
#include "nullvar/quadrature.hpp"
#include "nullvar/special.hpp"

using namespace nullvar;
constexpr double pi = std::numbers::pi;

namespace {

Vec2 dir(Vec2 xi) { return xi / xi.norm(); }

// ∫_Ω cos(ρ e·x) dx in polar coordinates, adaptive in both variables.
double polarOracle(const DomainSpec& s, Vec2 e, double rho) {
    return quad::adaptive(
        [&](double th) {
            const double R = radialBoundary(s, th);
            const double c = rho * std::cos(th - e.angle());
            return quad::adaptive([&](double r) { return std::cos(c * r) * r; }, 0.0, R, 1e-14);
        },
        0.0, 2 * pi, 1e-13);
}

}  // namespace

TEST_CASE("ball transform") {
    CHECK(ftBall(2, 1.0, 0.0) == doctest::Approx(pi));
    CHECK(ftBall(2, 1.0, 1e-7) == doctest::Approx(pi));
    CHECK(std::fabs(ftBall(2, 1.0, special::constants::j11())) <= 1e-10);
    // tensor oracle: ∫_{-1}^{1} 2√(1−x²) cos x dx
    const double oracle = quad::tanhSinh([](double x) { return 2 * std::sqrt(1 - x * x) * std::cos(x); }, -1.0, 1.0);
    CHECK(std::fabs(ftBall(2, 1.0, 1.0) - oracle) <= 1e-8);
    CHECK(ftBall(2, 1.0, 1.0) == doctest::Approx(2 * pi * special::besselJ(1, 1.0)).epsilon(1e-14));
    CHECK(ftBall(3, 1.0, 0.0) == doctest::Approx(4 * pi / 3));
    // 3-ball: 4π(sin ρ − ρ cos ρ)/ρ³
    CHECK(ftBall(3, 1.0, 2.0) == doctest::Approx(4 * pi * (std::sin(2.0) - 2 * std::cos(2.0)) / 8).epsilon(1e-12));
    CHECK(ftBall(2, 2.0, 1.5) == doctest::Approx(4.0 * ftBall(2, 1.0, 3.0)).epsilon(1e-13));
}

TEST_CASE("rectangle transform") {
    CHECK(ftRectangle({1, 0.5}, {0, 0}) == doctest::Approx(2.0));
    CHECK(std::fabs(ftRectangle({1, 0.5}, {pi, 0})) <= 1e-15);
    const double oracle = quad::adaptive(
        [](double x) { return quad::adaptive([&](double y) { return std::cos(x + y); }, -0.5, 0.5, 1e-14); }, -1.0,
        1.0, 1e-14);
    CHECK(std::fabs(ftRectangle({1, 0.5}, {1, 1}) - oracle) <= 1e-10);
}

TEST_CASE("directional transform examples") {
    CHECK(std::fabs(ftDirectional(makeBall(2, 1), Vec2::unit(0.7), special::constants::j11())) <= 1e-9);
    const auto I = makeIntervalUnion({1.5});
    const double direct = 2 * quad::adaptive([](double x) { return std::cos(x); }, 1.0, 2.0, 1e-14);
    CHECK(ftDirectional(I, {1, 0}, 1.0) == doctest::Approx(direct).epsilon(1e-13));
    CHECK(ftDirectional(I, {1, 0}, 1.0) == doctest::Approx(4 * std::sin(0.5) * std::cos(1.5)).epsilon(1e-13));
    CHECK_THROWS_AS(ftDirectional(I, Vec2::unit(0.3), 1.0), DomainError);

    const auto star = makeStarShaped(RadialProfile::mode(1, 1.0), 0.05);
    CHECK(std::fabs(ftDirectional(star, {1, 0}, 3.0) - polarOracle(star, {1, 0}, 3.0)) <= 1e-7);
    CHECK_THROWS_AS(ftDirectional(star, {1, 1}, 3.0), DomainError);
}

TEST_CASE("revolution body along its axis") {
    CHECK(ftRevolutionAxis(1.0, 0.0) == doctest::Approx(2 * pi / 3).epsilon(1e-14));
    // 2π∫₀¹(1−x)²cos(xξ)dx at ξ = π is 4/π
    const double oracle = 2 * pi * quad::adaptive([](double x) { return (1 - x) * (1 - x) * std::cos(pi * x); }, 0, 1);
    CHECK(ftRevolutionAxis(1.0, pi) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(ftRevolutionAxis(1.0, pi) == doctest::Approx(4 / pi).epsilon(1e-13));
    CHECK(ftRevolutionAxis(2.0, 1.0) == doctest::Approx(0.25 * ftRevolutionAxis(1.0, 1.0)).epsilon(1e-14));
    for (double x : {1e-3, 5e-3, 0.02, 1.0, 7.0, 30.0}) CHECK(ftRevolutionAxis(1.3, x) > 0);
    CHECK(ftRevolutionAxis(1.0, 0.00999) == doctest::Approx(ftRevolutionAxis(1.0, 0.01001)).epsilon(1e-5));
    // the general-direction route reduces to the axis formula
    const auto T = makeRevolutionBody(1.7);
    const Vec2 tilt = Vec2::unit(1e-9);
    CHECK(ftDirectional(T, tilt, 2.0) == doctest::Approx(ftRevolutionAxis(1.7, 2.0)).epsilon(1e-9));
}

TEST_CASE("polygon chord route agrees with the edge sum") {
    const auto hex = makeRegularPolygon(3, 1.0, 0.2);
    const auto v = polygonVertices(hex);
    for (double phi : {0.0, 0.3, 1.1, 2.5}) {
        const Vec2 e = Vec2::unit(phi);
        for (double rho : {0.0, 0.01, 0.7, 3.0, 9.5, 40.0}) {
            const auto c = ftPolygonComplex(v, e * rho);
            CHECK(std::fabs(c.imag()) <= 1e-10 * volume(hex));
            CHECK(std::fabs(ftDirectional(hex, e, rho) - c.real()) <= 1e-12);
        }
    }
    // rectangle: polygon route against the closed form
    const auto rect = makeConvexPolygon({{1, -0.5}, {1, 0.5}, {-1, 0.5}, {-1, -0.5}});
    for (double rho : {0.5, 2.0, pi})
        CHECK(std::fabs(ftDirectional(rect, Vec2::unit(0.4), rho) - ftDirectional(makeRectangle({1, 0.5}), Vec2::unit(0.4), rho)) <= 1e-13);
}

TEST_CASE("value at the origin, evenness, stretching") {
    ZetaProfile z{0.2, 0.05, 0.0};
    z.a = z.delta * (2 - z.delta) / (2 * z.deltaTilde * (2 + z.deltaTilde));
    const std::vector<DomainSpec> specs{makeBall(2, 1.3), makeRectangle({1, 0.3}), makeRegularPolygon(5, 1, 0.1),
                                        makeStarShaped(RadialProfile{{0.2, 0.1}, {0.05}}, 0.6), makeSpiky(16, z),
                                        makeRevolutionBody(1.4)};
    for (const auto& s : specs) {
        for (double phi : {0.0, 0.9, 2.0}) {
            const Vec2 e = Vec2::unit(phi);
            CHECK(ftDirectional(s, e, 0.0) == doctest::Approx(volume(s)).epsilon(1e-10));
            CHECK(ftDirectional(s, e, 2.3) == doctest::Approx(ftDirectional(s, -e, 2.3)).epsilon(1e-12));
        }
    }
    // 1D stretch x₁ ↦ αx₁: χ̂_stretched(ξ₁/α, ξ₂) = α χ̂(ξ₁, ξ₂)
    const double alpha = 1.7;
    const auto P = makeRegularPolygon(4, 1, 0.3);
    auto verts = polygonVertices(P);
    for (auto& p : verts) p.x *= alpha;
    const auto Q = makeConvexPolygon(verts);
    for (Vec2 xi : {Vec2{1.0, 2.0}, Vec2{-3.0, 0.5}}) {
        const Vec2 xs{xi.x / alpha, xi.y};
        CHECK(ftDirectional(Q, dir(xs), xs.norm()) == doctest::Approx(alpha * ftDirectional(P, dir(xi), xi.norm())).epsilon(1e-8));
    }
    CHECK(ftDirectional(makeRectangle({alpha, 0.5}), dir({1.0 / alpha, 2.0}), Vec2{1.0 / alpha, 2.0}.norm()) ==
          doctest::Approx(alpha * ftDirectional(makeRectangle({1, 0.5}), dir({1.0, 2.0}), Vec2{1.0, 2.0}.norm())).epsilon(1e-8));
}

TEST_CASE("star-shaped quadrature convergence and scan accuracy") {
    const auto spec = makeStarShaped(RadialProfile{{0.3, 0.0, 0.1}, {0.0, 0.2, 0.0, 0.05}}, 0.5);
    const auto& s = std::get<shape::StarShaped>(spec);
    const double vol = volume(spec);
    for (double phi : {0.0, 0.77}) {
        const Vec2 e = Vec2::unit(phi);
        DirectionalTransform T(spec, e);
        for (double rho = 0.25; rho < 12.0; rho += 0.5) {
            CHECK(std::fabs(ftStarPolar(s, e, rho, 4096) - ftStarPolar(s, e, rho, 8192)) <= 1e-9 * vol);
            CHECK(std::fabs(T(rho) - ftStarPolar(s, e, rho, 8192)) <= 1e-9 * vol);
            CHECK(std::fabs(T.scan(rho) - T(rho)) <= 1e-9 * vol);
        }
    }
    CHECK(radialCosineIntegral(0.0, 2.0) == doctest::Approx(2.0));
    for (double x : {0.99e-4, 1.01e-4, 0.3, 4.0}) {
        const double oracle = quad::adaptive([&](double r) { return std::cos(x * r) * r; }, 0.0, 1.0, 1e-15);
        CHECK(radialCosineIntegral(x, 1.0) == doctest::Approx(oracle).epsilon(1e-14));
    }
}

TEST_CASE("spiky harmonic expansion against arc quadrature") {
    for (int n : {8, 16, 64}) {
        ZetaProfile z{0.2, 0.05, 0.0};
        z.a = z.delta * (2 - z.delta) / (2 * z.deltaTilde * (2 + z.deltaTilde));
        const auto spec = makeSpiky(n, z);
        const auto& s = std::get<shape::Spiky>(spec);
        for (double phi : {0.0, 0.05, 0.3}) {
            for (double rho : {0.5, 2.0, 3.8, 9.0}) {
                const Vec2 e = Vec2::unit(phi);
                CHECK(std::fabs(ftDirectional(spec, e, rho) - ftSpikyArcs(s, e, rho)) <= 1e-11);
            }
        }
    }
}

TEST_CASE("averaged Bessel integral") {
    const double j01 = special::constants::j01();
    const auto a = averagedBessel(makeBall(2, j01));
    CHECK(a.direct == doctest::Approx(2 * pi * j01 * special::besselJ(1, j01)).epsilon(1e-10));
    CHECK(a.direct > 0);
    const auto b = averagedBessel(makeBall(2, special::constants::j11()));
    CHECK(std::fabs(b.direct) <= 1e-9);
    const double half = std::sqrt(4 * pi * j01 * j01) / 2;
    const auto sq = averagedBessel(makeRectangle({half, half}));
    CHECK(std::fabs(sq.direct - sq.viaAlpha) <= 1e-8 * std::fabs(sq.direct));
    const auto st = averagedBessel(makeStarShaped(RadialProfile{{0.2}, {0.1}}, 0.5, 3.0));
    CHECK(std::fabs(st.direct - st.viaAlpha) <= 1e-8 * 9 * pi);
    CHECK_THROWS_AS(averagedBessel(makeRevolutionBody(1.0)), UnsupportedDomain);
}
