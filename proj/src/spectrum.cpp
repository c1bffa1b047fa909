#include "nullvar/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>

#include "nullvar/errors.hpp"
#include "nullvar/null_variety.hpp"
#include "nullvar/parallel.hpp"
#include "nullvar/special.hpp"

namespace nullvar {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClusterGap = 1e-6;

// Fractional order ν ≥ 0 with the series coefficients prepared once.
struct FracOrder {
    static constexpr int kTerms = 64;
    double nu = 0.0;
    long double logGamma = 0.0;           // log Γ(ν + 1)
    std::array<long double, kTerms> inv{};  // 1/(m(m + ν))

    explicit FracOrder(double v) : nu(v), logGamma(std::lgamma(static_cast<long double>(v) + 1)) {
        for (int m = 1; m < kTerms; ++m) inv[m] = 1.0L / (m * (m + static_cast<long double>(v)));
    }
};

struct BesselPair {
    double j;
    double jp;
};

template <class Real>
BesselPair besselSeries(const FracOrder& o, double z) {
    const Real h = Real(0.5) * z;
    const Real h2 = h * h;
    Real term = o.nu == 0.0 ? Real(1) : static_cast<Real>(std::exp(static_cast<long double>(o.nu) * std::log(0.5L * z) - o.logGamma));
    Real sum = term, dsum = o.nu * term;
    for (int m = 1; m < FracOrder::kTerms; ++m) {
        term *= -h2 * static_cast<Real>(o.inv[m]);
        sum += term;
        dsum += (2 * m + o.nu) * term;
        if (m > h && std::fabs(term) <= Real(1e-18) * std::fabs(sum)) break;
    }
    return {static_cast<double>(sum), static_cast<double>(dsum / z)};
}

// J_ν(z) and J_ν'(z) for z > 0: ascending series (J' = Σ (2m + ν) t_m / z),
// in long double once cancellation grows, Boost beyond.
BesselPair besselFrac(const FracOrder& o, double z) {
    if (z > 20.0) return {boost::math::cyl_bessel_j(o.nu, z), boost::math::cyl_bessel_j_prime(o.nu, z)};
    return z <= 8.0 ? besselSeries<double>(o, z) : besselSeries<long double>(o, z);
}

struct Corner {
    Vec2 v;
    Vec2 d1;  // direction of the outgoing edge
    double alpha;
};

struct Setup {
    bool polygon = false;
    std::vector<Vec2> bp, bn;
    std::vector<double> bw;
    std::vector<Vec2> ip;
    std::vector<Corner> corners;
    double volume = 0.0;
    double diameter = 0.0;
    double rMinus = 0.0;
    double scale = 1.0;  // physical length = normalised length · scale
};

Vec2 unitOf(Vec2 a) { return a / a.norm(); }

Setup makeSetup(const DomainSpec& spec, const EigenOptions& opt) {
    Setup s;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const int nInterior = 80;

    if (const auto* b = std::get_if<shape::Ball>(&spec)) {
        if (b->dim != 2) throw UnsupportedDomain("eigenvalues: only the planar disk is supported");
        return makeSetup(makeStarShaped({}, 0.0, b->radius), opt);
    }
    if (std::holds_alternative<shape::Rectangle>(spec)) {
        if (dimension(spec) != 2) throw UnsupportedDomain("eigenvalues: collocation needs a planar rectangle");
        return makeSetup(makeConvexPolygon(polygonVertices(spec)), opt);
    }
    if (const auto* st = std::get_if<shape::StarShaped>(&spec)) {
        if (!checkConvexBalanced(spec).convex)
            throw UnsupportedDomain("eigenvalues: star-shaped domain is not convex");
        const auto d = descriptors(spec);
        s.scale = d.rPlus;
        s.volume = d.volume / (s.scale * s.scale);
        s.diameter = d.diameter / s.scale;
        s.rMinus = d.rMinus / s.scale;
        const double c = st->scale / s.scale;
        auto R = [&](double t) { return c * (1.0 + st->epsilon * st->profile(t)); };
        auto dR = [&](double t) { return c * st->epsilon * st->profile.derivative(t); };
        const int nb = std::max(32, opt.boundaryPoints / 2);
        for (int i = 0; i < nb; ++i) {
            const double t = (i + 0.5) * kPi / nb;
            const Vec2 er = Vec2::unit(t), et = perp(er);
            const double r = R(t), rp = dR(t);
            const Vec2 tangent = er * rp + et * r;
            s.bp.push_back(er * r);
            s.bn.push_back(unitOf(er * r - et * rp));
            s.bw.push_back(std::sqrt(tangent.norm() * kPi / nb));
        }
        for (int i = 0; i < nInterior; ++i) {
            const double t = kPi * uni(rng);
            s.ip.push_back(Vec2::unit(t) * (R(t) * (0.15 + 0.75 * uni(rng))));
        }
        return s;
    }
    if (const auto* p = std::get_if<shape::ConvexPolygon>(&spec)) {
        const auto d = descriptors(spec);
        s.polygon = true;
        s.scale = d.rPlus;
        s.volume = d.volume / (s.scale * s.scale);
        s.diameter = d.diameter / s.scale;
        s.rMinus = d.rMinus / s.scale;
        std::vector<Vec2> v;
        for (Vec2 q : p->vertices) v.push_back(q / s.scale);
        const int n = static_cast<int>(v.size());
        const int perEdge = std::max(16, opt.boundaryPoints / n);
        for (int i = 0; i < n / 2; ++i) {
            const Vec2 a = v[i], b = v[(i + 1) % n];
            const Vec2 normal = unitOf(Vec2{b.y - a.y, a.x - b.x});
            const double len = (b - a).norm();
            for (int j = 0; j < perEdge; ++j) {
                const double phi = kPi * (j + 0.5) / perEdge;
                const double t = 0.5 * (1.0 - std::cos(phi));
                s.bp.push_back(a + (b - a) * t);
                s.bn.push_back(normal);
                s.bw.push_back(std::sqrt(len * 0.5 * std::sin(phi) * kPi / perEdge));
            }
            const Vec2 prev = v[(i + n - 1) % n];
            Corner c;
            c.v = a;
            c.d1 = unitOf(b - a);
            const Vec2 d2 = unitOf(prev - a);
            c.alpha = std::atan2(cross(c.d1, d2), dot(c.d1, d2));
            s.corners.push_back(c);
        }
        const DomainSpec normalised = makeConvexPolygon(v);
        for (int i = 0; i < nInterior; ++i) {
            const double t = kPi * uni(rng);
            s.ip.push_back(Vec2::unit(t) * (radialBoundary(normalised, t) * (0.1 + 0.8 * uni(rng))));
        }
        return s;
    }
    throw UnsupportedDomain("eigenvalues: unsupported domain type " + typeName(spec));
}

struct Basis {
    int fourierOrders;
    int cornerTerms;
};

Eigen::MatrixXd buildMatrix(const Setup& s, Boundary bc, int parity, double k, Basis basis) {
    const bool neumann = bc == Boundary::Neumann;
    const int nB = static_cast<int>(s.bp.size());
    const int nI = static_cast<int>(s.ip.size());
    std::vector<int> orders;
    for (int i = 0; i < basis.fourierOrders; ++i) orders.push_back(parity + 2 * i);
    const int mmax = orders.empty() ? 0 : orders.back();
    int cols = 0;
    for (int m : orders) cols += m == 0 ? 1 : 2;
    const int cornerCols = s.polygon ? static_cast<int>(s.corners.size()) * basis.cornerTerms : 0;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nB + nI, cols + cornerCols);
    const double sign = parity == 0 ? 1.0 : -1.0;
    std::vector<std::vector<FracOrder>> fracOrders;
    if (s.polygon)
        for (const Corner& cn : s.corners) {
            fracOrders.emplace_back();
            for (int t = 0; t < basis.cornerTerms; ++t) fracOrders.back().emplace_back((neumann ? t : t + 1) * kPi / cn.alpha);
        }

    auto fillRow = [&](int row, Vec2 x, bool boundary, Vec2 normal, double w) {
        const bool grad = boundary && neumann;
        const double r = x.norm();
        const double th = std::atan2(x.y, x.x);
        const auto J = special::besselJSequence(mmax + 1, k * r);
        int col = 0;
        for (int m : orders) {
            const double c = std::cos(m * th), sn = std::sin(m * th);
            if (!grad) {
                A(row, col++) = w * J[m] * c;
                if (m) A(row, col++) = w * J[m] * sn;
            } else {
                const double jp = m == 0 ? -J[1] : 0.5 * (J[m - 1] - J[m + 1]);
                const Vec2 er = r > 0 ? x / r : Vec2{1.0, 0.0}, et = perp(er);
                const double dr = k * jp, dt = r > 0 ? m * J[m] / r : 0.0;
                A(row, col++) = w * dot(normal, er * (dr * c) - et * (dt * sn));
                if (m) A(row, col++) = w * dot(normal, er * (dr * sn) + et * (dt * c));
            }
        }
        if (!s.polygon) return;
        for (std::size_t ci = 0; ci < s.corners.size(); ++ci) {
            const Corner& cn = s.corners[ci];
            const int col0 = col + static_cast<int>(ci) * basis.cornerTerms;
            // f(x) = g(x) ± g(−x) with g = J_ν(k r) S(νθ) in polar coordinates about the corner
            for (int side = 0; side < 2; ++side) {
                const Vec2 d = (side ? -x : x) - cn.v;
                const double r = d.norm();
                if (r == 0.0) continue;
                const double theta = std::max(0.0, std::atan2(cross(cn.d1, d), dot(cn.d1, d)));
                const Vec2 er = d / r, et = perp(er);
                const double phi = kPi / cn.alpha * theta;
                const double c1 = std::cos(phi), s1 = std::sin(phi);
                double ct = neumann ? 1.0 : c1, st = neumann ? 0.0 : s1;
                const double factor = side ? (grad ? -sign : sign) : 1.0;
                for (int t = 0; t < basis.cornerTerms; ++t) {
                    const FracOrder& o = fracOrders[ci][t];
                    const BesselPair b = besselFrac(o, k * r);
                    const double S = neumann ? ct : st;
                    double v;
                    if (!grad) {
                        v = b.j * S;
                    } else {
                        const double dS = neumann ? -o.nu * st : o.nu * ct;
                        v = dot(normal, er * (k * b.jp * S) + et * (b.j * dS / r));
                    }
                    A(row, col0 + t) += w * factor * v;
                    const double cn1 = ct * c1 - st * s1;
                    st = st * c1 + ct * s1;
                    ct = cn1;
                }
            }
        }
    };
    for (int i = 0; i < nB; ++i) fillRow(i, s.bp[i], true, s.bn[i], s.bw[i]);
    for (int i = 0; i < nI; ++i) fillRow(nB + i, s.ip[i], false, {}, 1.0);
    return A;
}

SubspaceAngle sigmaAt(const Setup& s, Boundary bc, int parity, double k, Basis basis) {
    Eigen::MatrixXd A = buildMatrix(s, bc, parity, k, basis);
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
        const double n = A.col(j).norm();
        if (n > 0) A.col(j) /= n;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    qr.setThreshold(1e-12);
    const Eigen::Index rank = qr.rank();
    if (rank == 0) return {1.0, 1.0};
    const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(A.rows(), rank);
    const Eigen::Index nB = static_cast<Eigen::Index>(s.bp.size());
    Eigen::BDCSVD<Eigen::MatrixXd> svd(Q.topRows(nB));
    const auto& sv = svd.singularValues();
    const Eigen::Index n = sv.size();
    return {sv(n - 1), n > 1 ? sv(n - 2) : 1.0};
}

struct Found {
    double k;
    double sigma;
    int multiplicity;
    int parity;
};

// Near an isolated eigenvalue σ₁(k)² ≈ c²(k − k*)² + σ₀², so parabolas through
// σ₁² converge in a few rounds; Brent takes over if the fit misbehaves.
double refineMin(const std::function<double(double)>& f, double a, double b) {
    double h = 0.25 * (b - a);
    double x = 0.5 * (a + b);
    for (int iter = 0; iter < 8; ++iter) {
        const double y0 = std::pow(f(x - h), 2), y1 = std::pow(f(x), 2), y2 = std::pow(f(x + h), 2);
        const double curv = y0 - 2 * y1 + y2;
        if (!(curv > 0)) break;
        const double step = 0.5 * h * (y0 - y2) / curv;
        if (std::fabs(step) > 2 * h) break;
        x += step;
        if (x < a || x > b) break;
        if (std::fabs(step) < 1e-11 * x && h < 1e-6 * x) return x;
        h = std::max(std::min(h / 16, 4 * std::fabs(step)), 1e-8 * x);
    }
    return boost::math::tools::brent_find_minima(f, a, b, 42).first;
}

constexpr double kAcceptSigma = 2e-3;
constexpr double kCoarseThreshold = 0.25;
constexpr double kCoarseStep = 0.04;

Basis fullBasis(const Setup& s, const EigenOptions& opt) {
    return {s.polygon ? std::max(4, opt.basisOrder / 3) : opt.basisOrder, s.polygon ? opt.cornerTerms : 0};
}

Basis coarseBasis(const Setup& s, const EigenOptions& opt) {
    return {s.polygon ? 4 : std::max(8, opt.basisOrder / 2), s.polygon ? std::max(4, opt.cornerTerms / 2) : 0};
}

Basis reducedBasis(const Setup& s, const EigenOptions& opt) {
    const Basis f = fullBasis(s, opt);
    return {std::max(4, f.fourierOrders - (s.polygon ? 1 : 6)), s.polygon ? std::max(4, f.cornerTerms - 3) : 0};
}

// Local minima of sigma on a uniform grid, refined by Brent.
std::vector<double> gridMinima(const std::function<double(double)>& f, double a, double b, int m, unsigned workers,
                               bool keepEnds) {
    std::vector<double> x(m), y(m);
    for (int j = 0; j < m; ++j) x[j] = a + (b - a) * j / (m - 1);
    parallelFor(m, workers, [&](std::size_t j) { y[j] = f(x[j]); });
    std::vector<double> out;
    for (int j = 0; j < m; ++j) {
        const double l = j > 0 ? y[j - 1] : (keepEnds ? 2.0 : -1.0);
        const double r = j + 1 < m ? y[j + 1] : (keepEnds ? 2.0 : -1.0);
        if (y[j] <= l && y[j] <= r) out.push_back(refineMin(f, x[std::max(0, j - 1)], x[std::min(m - 1, j + 1)]));
    }
    return out;
}

std::vector<Found> sweepClass(const Setup& s, Boundary bc, int parity, double klo, double khi,
                              const EigenOptions& opt) {
    const Basis full = fullBasis(s, opt), coarse = coarseBasis(s, opt);
    const int n = std::max(3, static_cast<int>(std::ceil((khi - klo) / kCoarseStep)) + 1);
    std::vector<double> ks(n), sig(n);
    for (int i = 0; i < n; ++i) ks[i] = klo + (khi - klo) * i / (n - 1);
    parallelFor(n, opt.workers, [&](std::size_t i) { sig[i] = sigmaAt(s, bc, parity, ks[i], coarse).sigma1; });

    auto sigmaFull = [&](double k) { return sigmaAt(s, bc, parity, k, full).sigma1; };
    std::vector<Found> out;
    // A close pair makes σ₁ W-shaped with a shallow bump between the minima;
    // walk downhill so only genuine local minima are recorded.
    auto polish = [&](double k) {
        const double d = 1e-6 * k, f0 = sigmaFull(k), fl = sigmaFull(k - d), fr = sigmaFull(k + d);
        if (fl >= f0 && fr >= f0) return k;
        // expand downhill until the bracket closes, then Brent on σ₁² (smooth at the minimum)
        const double dir = fl < fr ? -1.0 : 1.0;
        double a = k, b = k + dir * d, fb = std::min(fl, fr), step = d;
        while (step < 0.1 * k) {
            step *= 2;
            const double c = b + dir * step, fc = sigmaFull(c);
            if (fc >= fb) {
                auto sq = [&](double q) { const double v = sigmaFull(q); return v * v; };
                return boost::math::tools::brent_find_minima(sq, std::min(a, c), std::max(a, c), 40).first;
            }
            a = b, b = c, fb = fc;
        }
        return b;
    };
    auto record = [&](double k) {
        k = polish(k);
        const SubspaceAngle sa = sigmaAt(s, bc, parity, k, full);
        if (sa.sigma1 > kAcceptSigma) return;
        for (const Found& f : out)
            if (std::fabs(f.k - k) < 1e-7 * k) return;
        out.push_back({k, sa.sigma1, sa.sigma2 < std::max(kAcceptSigma, 50.0 * sa.sigma1) ? 2 : 1, parity});
    };
    for (int i = 0; i < n; ++i) {
        const double left = i > 0 ? sig[i - 1] : 2.0, right = i + 1 < n ? sig[i + 1] : 2.0;
        if (!(sig[i] <= left && sig[i] <= right && sig[i] < kCoarseThreshold)) continue;
        const double a = ks[std::max(0, i - 1)], b = ks[std::min(n - 1, i + 1)];
        for (double k : gridMinima(sigmaFull, a, b, 9, opt.workers, true)) {
            // a small second singular value means a close partner: look again on a finer grid
            if (sigmaAt(s, bc, parity, k, full).sigma2 < 0.05) {
                const double w = (b - a) / 2;
                for (double q : gridMinima(sigmaFull, k - w, k + w, 33, opt.workers, true)) record(q);
            }
            record(k);
        }
    }
    std::sort(out.begin(), out.end(), [](const Found& x, const Found& y) { return x.k < y.k; });
    // a pair resolved as two minima must not also count as a double
    for (std::size_t i = 0; i < out.size(); ++i) {
        const bool near = (i > 0 && out[i].k - out[i - 1].k < 0.02) ||
                          (i + 1 < out.size() && out[i + 1].k - out[i].k < 0.02);
        if (near) out[i].multiplicity = 1;
    }
    return out;
}

std::vector<int> clusters(const std::vector<double>& v) {
    std::vector<int> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        c[i] = static_cast<int>(i);
        if (i > 0 && std::fabs(v[i] - v[i - 1]) <= kClusterGap * std::max(std::fabs(v[i]), 1e-300)) c[i] = c[i - 1];
    }
    return c;
}

SpectrumResult diskClosedForm(double R, Boundary bc, int count);

SpectrumResult collocation(const DomainSpec& spec, Boundary bc, const EigenOptions& opt) {
    const Setup s = makeSetup(spec, opt);
    const int count = opt.count;
    const double j01 = special::constants::j01();
    const bool dirichlet = bc == Boundary::Dirichlet;
    const double klo = dirichlet ? 0.98 * j01 * std::sqrt(kPi / s.volume) : 0.95 * kPi / s.diameter;
    const int need = dirichlet ? count : count - 1;
    if (need == 0) return {{0.0}, {0.0}, {0}, "collocation"};
    // Dirichlet: domain monotonicity against the inscribed disk caps the search
    const double cap = dirichlet ? 1.02 * std::sqrt(diskClosedForm(s.rMinus, bc, need).values.back()) : 1e300;
    double lo = klo;
    double hi = std::min(cap, 1.1 * std::sqrt(4.0 * kPi * (need + 1) / s.volume) + 0.3);
    std::vector<Found> found;
    int total = 0;
    for (int attempt = 0; attempt < 12 && total < need; ++attempt) {
        for (int parity = 0; parity < 2; ++parity)
            for (const Found& f : sweepClass(s, bc, parity, lo, hi, opt)) found.push_back(f), total += f.multiplicity;
        if (hi >= cap) break;
        lo = hi - kCoarseStep;
        hi = std::min(cap, hi * 1.25);
    }
    if (total < need)
        throw NumericalFailure("collocation: fewer eigenvalues located than requested",
                               found.empty() ? 1.0 : found.back().sigma);
    std::sort(found.begin(), found.end(), [](const Found& x, const Found& y) { return x.k < y.k; });

    const Basis reduced = reducedBasis(s, opt);
    SpectrumResult res;
    res.method = "collocation";
    if (!dirichlet) {
        res.values.push_back(0.0);
        res.accuracy.push_back(0.0);
    }
    for (const Found& f : found) {
        if (static_cast<int>(res.values.size()) >= count) break;
        // accuracy: relocate with a reduced basis
        auto g = [&](double q) { return sigmaAt(s, bc, f.parity, q, reduced).sigma1; };
        const double q = refineMin(g, f.k * (1 - 2e-3), f.k * (1 + 2e-3));
        // the boundary residual σ₁ bounds the relative eigenvalue error up to a modest constant
        const double acc = std::max({std::fabs(q * q - f.k * f.k) / (f.k * f.k), 2.0 * f.sigma, 1e-10});
        for (int m = 0; m < f.multiplicity && static_cast<int>(res.values.size()) < count; ++m) {
            res.values.push_back(f.k * f.k / (s.scale * s.scale));
            res.accuracy.push_back(acc);
        }
    }
    res.cluster = clusters(res.values);
    return res;
}

// Closed forms

SpectrumResult diskClosedForm(double R, Boundary bc, int count) {
    std::vector<double> v;
    if (bc == Boundary::Neumann) v.push_back(0.0);
    for (int m = 0; m <= 20; ++m) {
        for (int k = 1; k <= 10; ++k) {
            const double z = bc == Boundary::Dirichlet ? special::besselZero(m, k) : special::besselDerivativeZero(m, k);
            const double lam = z * z / (R * R);
            v.push_back(lam);
            if (m > 0) v.push_back(lam);
        }
    }
    std::sort(v.begin(), v.end());
    v.resize(count);
    SpectrumResult r;
    r.values = v;
    r.accuracy.assign(v.size(), 1e-14);
    r.cluster = clusters(v);
    r.method = "closed-form";
    return r;
}

SpectrumResult boxClosedForm(const std::vector<double>& halfSides, Boundary bc, int count) {
    const int d = static_cast<int>(halfSides.size());
    const int base = bc == Boundary::Dirichlet ? 1 : 0;
    auto value = [&](const std::vector<int>& n) {
        double s = 0.0;
        for (int j = 0; j < d; ++j) s += std::pow(n[j] / (2.0 * halfSides[j]), 2);
        return kPi * kPi * s;
    };
    std::set<std::pair<double, std::vector<int>>> frontier;
    std::set<std::vector<int>> seen;
    std::vector<int> start(d, base);
    frontier.insert({value(start), start});
    seen.insert(start);
    std::vector<double> v;
    while (static_cast<int>(v.size()) < count) {
        auto it = frontier.begin();
        auto [lam, n] = *it;
        frontier.erase(it);
        v.push_back(lam);
        for (int j = 0; j < d; ++j) {
            auto m = n;
            ++m[j];
            if (seen.insert(m).second) frontier.insert({value(m), m});
        }
    }
    SpectrumResult r;
    r.values = v;
    r.accuracy.assign(v.size(), 1e-14);
    r.cluster = clusters(v);
    r.method = "closed-form";
    return r;
}

}  // namespace

SpectrumResult eigenvalues(const DomainSpec& spec, Boundary bc, const EigenOptions& opt) {
    if (opt.count < 1 || opt.count > 10) throw DomainError("eigenvalues: count must be in [1, 10]");
    validate(spec);
    if (!opt.forceCollocation) {
        if (const auto* b = std::get_if<shape::Ball>(&spec)) {
            if (b->dim != 2) throw UnsupportedDomain("eigenvalues: only the planar disk is supported");
            return diskClosedForm(b->radius, bc, opt.count);
        }
        if (const auto* r = std::get_if<shape::Rectangle>(&spec)) return boxClosedForm(r->halfSides, bc, opt.count);
    }
    return collocation(spec, bc, opt);
}

SpectrumResult dirichletEigs(const DomainSpec& spec, const EigenOptions& opt) {
    return eigenvalues(spec, Boundary::Dirichlet, opt);
}

SpectrumResult neumannEigs(const DomainSpec& spec, const EigenOptions& opt) {
    return eigenvalues(spec, Boundary::Neumann, opt);
}

SubspaceAngle collocationSigma(const DomainSpec& spec, Boundary bc, int parity, double k, const EigenOptions& opt) {
    const Setup s = makeSetup(spec, opt);
    return sigmaAt(s, bc, parity, k * s.scale, fullBasis(s, opt));
}

bool InequalityReport::allPass() const {
    return std::all_of(checks.begin(), checks.end(), [](const InequalityCheck& c) { return !c.applicable || c.pass; });
}

InequalityReport inequalityChecks(const DomainSpec& spec, const EigenOptions& opt) {
    InequalityReport rep;
    EigenOptions o = opt;
    o.count = 7;
    rep.dirichlet = dirichletEigs(spec, o);
    rep.neumann = neumannEigs(spec, o);
    KappaOptions ko;
    ko.workers = opt.workers;
    const auto kv = kappa(spec, ko);
    if (!kv.kappa) throw NumericalFailure("inequality checks: no real zero found for κ");
    rep.kappa = *kv.kappa;
    const double kErr = 1e-8 * rep.kappa;
    const auto& lam = rep.dirichlet.values;
    const auto& mu = rep.neumann.values;
    auto err = [](const SpectrumResult& r, int i) { return r.accuracy[i] * r.values[i] + 1e-12; };
    auto push = [&](Check c, bool applicable = true) { rep.checks.push_back(applicable ? c : notApplicable(c)); };
    const double s2 = std::sqrt(mu[1]);
    const double s2err = err(rep.neumann, 1) / (2 * s2);
    push(checkGE("kappa >= sqrt(mu2)", rep.kappa, s2, kErr + s2err));
    push(checkGE("kappa >= 2 sqrt(mu2)", rep.kappa, 2 * s2, kErr + 2 * s2err));
    for (int n = 1; n <= 5; ++n) {
        const double tol = err(rep.neumann, n) + err(rep.dirichlet, n - 1);
        push(checkLE("mu" + std::to_string(n + 1) + " < lambda" + std::to_string(n), mu[n], lam[n - 1], tol, "<"));
    }
    const bool curve = std::holds_alternative<shape::ConvexPolygon>(spec) || std::holds_alternative<shape::StarShaped>(spec) ||
                       (std::holds_alternative<shape::Ball>(spec) && dimension(spec) == 2) ||
                       (std::holds_alternative<shape::Rectangle>(spec) && dimension(spec) == 2);
    if (curve) {
        rep.maxKappa1 = nullCurve(spec, 360, opt.workers).maxKappa1;
        const double s3 = std::sqrt(mu[2]);
        push(checkGE("max kappa1 >= sqrt(mu3)", rep.maxKappa1, s3, kErr + err(rep.neumann, 2) / (2 * s3)));
    }
    for (int n = 1; n <= 5; ++n) {
        const bool applies = rep.kappa <= 2 * std::sqrt(lam[n - 1]);
        const double tol = err(rep.neumann, n + 1) + err(rep.dirichlet, n - 1);
        push(checkLE("mu" + std::to_string(n + 2) + " <= lambda" + std::to_string(n) + " when kappa <= 2 sqrt(lambda" +
                         std::to_string(n) + ")",
                     mu[n + 1], lam[n - 1], tol),
             applies);
    }
    return rep;
}

}  // namespace nullvar
