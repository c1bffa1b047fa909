#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "nullvar/corpus.hpp"
#include "nullvar/domain.hpp"
#include "nullvar/errors.hpp"
#include "nullvar/spectrum.hpp"

using namespace nullvar;
constexpr double pi = std::numbers::pi;

namespace {

// j_{0,1}², j_{1,1}², (j'_{1,1})², j_{2,1}² from published tables
constexpr double j01sq = 5.783185962946784;
constexpr double j11sq = 14.681970642123893;
constexpr double jp11sq = 1.8411837813406593 * 1.8411837813406593;
constexpr double j21sq = 26.374616427163247;

// Galerkin oracle on the parallelogram M·[-1,1]²: after the affine change of
// variables the Laplacian is div(A∇) with A = M⁻¹M⁻ᵀ on the square, and the
// tensor sine (Dirichlet) or cosine (Neumann) basis has closed-form entries.
std::vector<double> parallelogramEigs(const Eigen::Matrix2d& M, bool neumann, int N) {
    const Eigen::Matrix2d Mi = M.inverse();
    const Eigen::Matrix2d A = Mi * Mi.transpose();
    const int lo = neumann ? 0 : 1;
    std::vector<int> idx;
    for (int m = lo; m < lo + N; ++m) idx.push_back(m);
    auto freq = [](int m) { return m * pi / 2; };
    auto nrm = [&](int m) { return neumann && m == 0 ? std::sqrt(2.0) : 1.0; };
    // ∫φ_m' φ_p over [-1, 1]
    auto D = [&](int m, int p) {
        if ((m + p) % 2 == 0) return 0.0;
        const double a = freq(m), b = freq(p);
        const double v = neumann ? -a * 2 * a / (a * a - b * b) : a * 2 * b / (b * b - a * a);
        return v / (nrm(m) * nrm(p));
    };
    auto S = [&](int m, int p) { return m == p ? freq(m) * freq(m) / (nrm(m) * nrm(m)) : 0.0; };
    const int n = N * N;
    Eigen::MatrixXd K(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int m = idx[i / N], q1 = idx[i % N], p = idx[j / N], q2 = idx[j % N];
            const double d1 = m == p ? 1.0 : 0.0, d2 = q1 == q2 ? 1.0 : 0.0;
            K(i, j) = A(0, 0) * S(m, p) * d2 + A(1, 1) * d1 * S(q1, q2) +
                      A(0, 1) * (D(m, p) * D(q2, q1) + D(p, m) * D(q1, q2));
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K, Eigen::EigenvaluesOnly);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(v.begin(), v.end());
    return v;
}

// Neumann needs no boundary condition in the Ritz space: Legendre tensor
// products, with 1D matrices from Gauss-Legendre quadrature, are exact for
// polynomials and converge much faster than cosines on a skewed domain.
std::vector<double> parallelogramNeumann(const Eigen::Matrix2d& M, int P) {
    const Eigen::Matrix2d Mi = M.inverse();
    const Eigen::Matrix2d A = Mi * Mi.transpose();
    const int q = P + 2;
    // Golub-Welsch nodes and weights
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(q, q);
    for (int i = 1; i < q; ++i) J(i, i - 1) = J(i - 1, i) = i / std::sqrt(4.0 * i * i - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gw(J);
    const Eigen::VectorXd x = gw.eigenvalues();
    const Eigen::VectorXd w = 2 * gw.eigenvectors().row(0).array().square();
    const int n1 = P + 1;
    Eigen::MatrixXd L(n1, q), dL(n1, q);  // normalised P_m and P_m' at the nodes
    for (int k = 0; k < q; ++k) {
        double p0 = 1, p1 = x(k), d0 = 0, d1 = 1;
        for (int m = 0; m < n1; ++m) {
            const double c = std::sqrt((2 * m + 1) / 2.0);
            L(m, k) = c * p0;
            dL(m, k) = c * d0;
            const double p2 = ((2 * m + 3) * x(k) * p1 - (m + 1) * p0) / (m + 2);
            const double d2 = d0 + (2 * m + 3) * p1;
            p0 = p1, p1 = p2, d0 = d1, d1 = d2;
        }
    }
    const Eigen::MatrixXd S = dL * w.asDiagonal() * dL.transpose();
    const Eigen::MatrixXd C = dL * w.asDiagonal() * L.transpose();  // ∫P_a' P_b
    const int n = n1 * n1;
    Eigen::MatrixXd K(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int m = i / n1, q1 = i % n1, p = j / n1, q2 = j % n1;
            K(i, j) = A(0, 0) * S(m, p) * (q1 == q2) + A(1, 1) * (m == p) * S(q1, q2) +
                      A(0, 1) * (C(m, p) * C(q2, q1) + C(p, m) * C(q1, q2));
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K, Eigen::EigenvaluesOnly);
    std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(v.begin(), v.end());
    return v;
}

DomainSpec parallelogram(const Eigen::Matrix2d& M) {
    auto img = [&](double a, double b) { return Vec2{M(0, 0) * a + M(0, 1) * b, M(1, 0) * a + M(1, 1) * b}; };
    return makeConvexPolygon({img(1, -1), img(1, 1), img(-1, 1), img(-1, -1)});
}

}  // namespace

TEST_CASE("closed forms") {
    const auto d = dirichletEigs(makeBall(2, 1), {.count = 6});
    CHECK(d.method == "closed-form");
    CHECK(d.values[0] == doctest::Approx(j01sq).epsilon(1e-12));
    CHECK(d.values[1] == doctest::Approx(j11sq).epsilon(1e-12));
    CHECK(d.values[2] == doctest::Approx(j11sq).epsilon(1e-12));
    CHECK(d.values[3] == doctest::Approx(j21sq).epsilon(1e-12));
    CHECK(d.cluster[2] == 1);
    const auto n = neumannEigs(makeBall(2, 2), {.count = 3});
    CHECK(n.values[0] == 0.0);
    CHECK(n.values[1] == doctest::Approx(jp11sq / 4).epsilon(1e-12));
    CHECK(n.values[2] == doctest::Approx(jp11sq / 4).epsilon(1e-12));

    const auto r = dirichletEigs(makeRectangle({1, 0.5}), {.count = 3});
    CHECK(r.values[0] == doctest::Approx(pi * pi * 1.25).epsilon(1e-14));
    CHECK(r.values[1] == doctest::Approx(2 * pi * pi).epsilon(1e-14));
    CHECK(r.values[2] == doctest::Approx(pi * pi * 3.25).epsilon(1e-14));
    const auto rn = neumannEigs(makeRectangle({1, 0.5}), {.count = 3});
    CHECK(rn.values[1] == doctest::Approx(pi * pi / 4).epsilon(1e-14));
    CHECK(rn.values[2] == doctest::Approx(pi * pi).epsilon(1e-14));
    const auto sq = neumannEigs(makeRectangle({0.5, 0.5}), {.count = 3});
    CHECK(sq.values[1] == doctest::Approx(pi * pi));
    CHECK(sq.values[2] == doctest::Approx(pi * pi));
    // a 3D box has a closed form too
    const auto cube = dirichletEigs(makeRectangle({0.5, 0.5, 0.5}), {.count = 4});
    CHECK(cube.values[0] == doctest::Approx(3 * pi * pi));
    CHECK(cube.values[3] == doctest::Approx(6 * pi * pi));
    CHECK(cube.cluster[3] == 1);
}

TEST_CASE("collocation on the disk and rectangle") {
    const EigenOptions o{.count = 6, .forceCollocation = true};
    const auto d = dirichletEigs(makeBall(2, 1), o);
    CHECK(d.method == "collocation");
    CHECK(d.values[0] == doctest::Approx(j01sq).epsilon(1e-8));
    CHECK(d.values[1] == doctest::Approx(j11sq).epsilon(1e-8));
    CHECK(d.values[2] == doctest::Approx(j11sq).epsilon(1e-8));
    CHECK(d.values[3] == doctest::Approx(j21sq).epsilon(1e-8));
    CHECK(d.cluster[2] == 1);
    const auto n = neumannEigs(makeStarShaped({}, 0.0, 1.0), o);
    CHECK(n.values[1] == doctest::Approx(jp11sq).epsilon(1e-8));
    CHECK(n.values[2] == doctest::Approx(jp11sq).epsilon(1e-8));
    for (double a : n.accuracy) CHECK(a < 1e-6);

    const auto r = dirichletEigs(makeRectangle({1, 0.5}), o);
    const double lam[] = {1.25, 2, 3.25, 4.25, 5, 5};
    for (int i = 0; i < 6; ++i) CHECK(r.values[i] / (pi * pi) == doctest::Approx(lam[i]).epsilon(1e-8));
    const auto rn = neumannEigs(makeRectangle({1, 0.5}), o);
    const double mu[] = {0, 0.25, 1, 1, 1.25, 2};
    for (int i = 0; i < 6; ++i) CHECK(rn.values[i] / (pi * pi) == doctest::Approx(mu[i]).epsilon(1e-8));
}

TEST_CASE("rotated square") {
    const double c = std::cos(0.3), s = std::sin(0.3);
    std::vector<Vec2> v;
    for (Vec2 p : {Vec2{1, -1}, Vec2{1, 1}, Vec2{-1, 1}, Vec2{-1, -1}}) v.push_back({c * p.x - s * p.y, s * p.x + c * p.y});
    const auto sq = makeConvexPolygon(v);
    const auto d = dirichletEigs(sq, {.count = 4});
    // side 2: π²(m² + n²)/4
    CHECK(d.values[0] == doctest::Approx(pi * pi / 2).epsilon(1e-8));
    CHECK(d.values[1] == doctest::Approx(pi * pi * 5 / 4).epsilon(1e-8));
    CHECK(d.values[2] == doctest::Approx(pi * pi * 5 / 4).epsilon(1e-8));
    CHECK(d.values[3] == doctest::Approx(pi * pi * 2).epsilon(1e-8));
    const auto n = neumannEigs(sq, {.count = 4});
    CHECK(n.values[1] == doctest::Approx(pi * pi / 4).epsilon(1e-8));
    CHECK(n.values[2] == doctest::Approx(pi * pi / 4).epsilon(1e-8));
    CHECK(n.values[3] == doctest::Approx(pi * pi / 2).epsilon(1e-8));
}

TEST_CASE("parallelogram against a Galerkin oracle") {
    Eigen::Matrix2d M;
    M << 1.0, 0.45, 0.1, 0.7;
    const auto spec = parallelogram(M);
    const auto gd = parallelogramEigs(M, false, 26);
    const auto gn = parallelogramNeumann(M, 40);
    const auto d = dirichletEigs(spec, {.count = 4});
    const auto n = neumannEigs(spec, {.count = 4});
    for (int i = 0; i < 4; ++i) {
        CHECK(d.values[i] == doctest::Approx(gd[i]).epsilon(2e-3));
        CHECK(n.values[i] == doctest::Approx(gn[i]).epsilon(2e-3));
        // the Galerkin values are upper bounds
        CHECK(d.values[i] <= gd[i] * (1 + 1e-9));
        CHECK(n.values[i] <= gn[i] * (1 + 1e-9));
    }
}

TEST_CASE("scaling, Faber-Krahn and ratio bounds") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 3; ++i) {
        const auto spec = i < 2 ? randomPolygon(rng) : randomStar(rng);
        const auto d = dirichletEigs(spec, {.count = 2});
        const auto d2 = dirichletEigs(scaled(spec, 1.7), {.count = 2});
        CHECK(d2.values[1] * 1.7 * 1.7 == doctest::Approx(d.values[1]).epsilon(1e-7));
        CHECK(d.values[0] >= pi * j01sq / volume(spec) * (1 - 1e-9));
        CHECK(d.values[1] < 3 * d.values[0]);
        CHECK(d.values[1] / d.values[0] <= j11sq / j01sq + 1e-6);
        const auto n = neumannEigs(spec, {.count = 3});
        CHECK(n.values[1] < d.values[0]);
        CHECK(n.values[1] <= n.values[2]);
    }
}

TEST_CASE("near-disk star resolves the split pair") {
    const auto spec = makeStarShaped(RadialProfile::mode(1, 1.0), 1e-3);
    const auto d = dirichletEigs(spec, {.count = 3});
    REQUIRE(d.values.size() == 3);
    CHECK(d.values[1] < d.values[2]);
    CHECK(d.values[2] - d.values[1] > 1e-3 * j11sq);
    CHECK(d.cluster[2] == 2);

    // first order: λ₂,₃ = j11²(1 ∓ ε) for F = cos 2θ
    const double eps = 0.01;
    const auto e = dirichletEigs(makeStarShaped(RadialProfile::mode(1, 1.0), eps), {.count = 3});
    CHECK(std::fabs(e.values[1] - j11sq * (1 - eps)) < 2 * eps * eps * j11sq);
    CHECK(std::fabs(e.values[2] - j11sq * (1 + eps)) < 2 * eps * eps * j11sq);
}

TEST_CASE("close pair inside one coarse cell") {
    // σ₁ is W-shaped here; both members must be genuine minima, not the bump between them
    const auto spec = makeCorpus(1, 0, 4).stars[3];
    const auto d = dirichletEigs(spec, {.count = 3});
    CHECK(d.values[2] - d.values[1] > 0.05);
    for (int i : {1, 2}) {
        const double k = std::sqrt(d.values[i]);
        CHECK(collocationSigma(spec, Boundary::Dirichlet, 1, k).sigma1 < 1e-6);
        CHECK(d.accuracy[i] < 1e-6);
    }
}

TEST_CASE("inequality checks") {
    const auto disk = inequalityChecks(makeBall(2, 1));
    CHECK(disk.allPass());
    CHECK(disk.kappa == doctest::Approx(3.831705970207512));
    const auto rect = inequalityChecks(makeRectangle({1, 0.5}));
    CHECK(rect.allPass());
    const auto it = std::find_if(rect.checks.begin(), rect.checks.end(),
                                 [](const InequalityCheck& c) { return c.name == "kappa >= 2 sqrt(mu2)"; });
    REQUIRE(it != rect.checks.end());
    CHECK(std::fabs(it->margin) <= 1e-10);
}

TEST_CASE("unsupported inputs") {
    CHECK_THROWS_AS(dirichletEigs(makeSpiky(8, {0.2, 0.05, 0.0})), UnsupportedDomain);
    CHECK_THROWS_AS(dirichletEigs(makeBall(3, 1)), UnsupportedDomain);
    CHECK_THROWS_AS(dirichletEigs(makeBall(2, 1), {.count = 11}), DomainError);
}
