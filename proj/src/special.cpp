#include "nullvar/special.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "nullvar/errors.hpp"

namespace nullvar::special {
namespace {

constexpr double kSeriesLimit = 12.0;

void checkOrder(BesselOrder order) {
    if (order.twice() < 0 || order.twice() > 2 * kMaxOrder)
        throw DomainError("Bessel order " + std::to_string(order.value()) + " outside [0, " +
                          std::to_string(kMaxOrder) + "]");
}

void checkArgument(double x) {
    if (!std::isfinite(x) || x < 0.0) throw DomainError("Bessel argument must be finite and >= 0");
}

long double seriesJ(long double nu, long double x) {
    const long double half = x / 2;
    const long double q = -half * half;
    long double term = std::pow(half, nu) / std::tgamma(nu + 1);
    long double sum = term;
    for (int k = 0; k < 500; ++k) {
        term *= q / ((k + 1) * (k + 1 + nu));
        sum += term;
        if (std::fabs(term) <= 1e-21L * std::fabs(sum) && k > half) break;
    }
    return sum;
}

int millerStart(double nu, double x) {
    const double m = std::max(nu, x);
    int n = static_cast<int>(m + 30.0 + std::sqrt(60.0 * m));
    return n + (n % 2);  // even start keeps the normalisation sum aligned
}

// J_0 .. J_nmax at x > 0 by Miller's algorithm normalised with J0 + 2ΣJ_2k = 1.
std::vector<double> millerIntegerSequence(double x, int nmax) {
    const int start = std::max(millerStart(nmax, x), nmax + 2);
    std::vector<long double> v(start + 2, 0.0L);
    v[start + 1] = 0.0L;
    v[start] = 1e-300L;
    for (int k = start; k >= 1; --k) {
        v[k - 1] = (2.0L * k / x) * v[k] - v[k + 1];
        if (std::fabs(v[k - 1]) > 1e300L) {
            for (int j = k - 1; j <= start; ++j) v[j] *= 1e-300L;
        }
    }
    long double norm = v[0];
    for (int k = 2; k <= start; k += 2) norm += 2.0L * v[k];
    std::vector<double> out(nmax + 1);
    for (int k = 0; k <= nmax; ++k) out[k] = static_cast<double>(v[k] / norm);
    return out;
}

double millerInteger(int n, double x) { return millerIntegerSequence(x, n)[n]; }

// Half-integer order m + 1/2 by downward recurrence, normalised against the
// elementary J_{1/2} and J_{-1/2}.
double millerHalfInteger(int m, double x) {
    const int start = millerStart(m + 0.5, x);
    // index i represents order i - 1/2, i = 0 .. start+1
    std::vector<long double> v(start + 2, 0.0L);
    v[start + 1] = 0.0L;
    v[start] = 1e-300L;
    for (int i = start; i >= 1; --i) {
        const long double nu = i - 0.5L;
        v[i - 1] = (2.0L * nu / x) * v[i] - v[i + 1];
        if (std::fabs(v[i - 1]) > 1e300L) {
            for (int j = i - 1; j <= start; ++j) v[j] *= 1e-300L;
        }
    }
    const long double s = std::sqrt(2.0L / (std::numbers::pi_v<long double> * x));
    const long double jp = s * std::sin(static_cast<long double>(x));   // J_{1/2}
    const long double jm = s * std::cos(static_cast<long double>(x));   // J_{-1/2}
    const long double up = v[1];
    const long double um = v[0];
    const long double c = (up * jp + um * jm) / (up * up + um * um);
    return static_cast<double>(c * v[m + 1]);
}

using Fn = std::function<double(double)>;

double polishRoot(const Fn& f, const Fn& df, double lo, double hi, double guess) {
    double flo = f(lo);
    double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx < 0) == (flo < 0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
        }
        const double d = df(x);
        double next = (d != 0.0) ? x - fx / d : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - x) <= 1e-16 * std::fabs(x) || hi - lo <= 4e-16 * hi) return next;
        x = next;
    }
    return x;
}

double kthSignChange(const Fn& f, const Fn& df, double start, int k, double guess) {
    constexpr double step = 0.25;
    double a = start;
    double fa = f(a);
    int found = 0;
    for (int i = 0; i < 100000; ++i) {
        const double b = a + step;
        const double fb = f(b);
        if (fb == 0.0 || (fa < 0) != (fb < 0)) {
            if (++found == k) {
                if (fb == 0.0) return b;
                return polishRoot(f, df, a, b, guess);
            }
        }
        a = b;
        fa = fb;
    }
    throw NumericalFailure("zero bracketing did not terminate");
}

// McMahon's large-k expansion for j_{ν,k}.
double mcMahon(double nu, int k) {
    const double mu = 4.0 * nu * nu;
    const double beta = (k + 0.5 * nu - 0.25) * std::numbers::pi;
    const double b8 = 8.0 * beta;
    return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
}

}  // namespace

double besselJ(BesselOrder order, double x) {
    checkOrder(order);
    checkArgument(x);
    if (x == 0.0) return order.twice() == 0 ? 1.0 : 0.0;
    if (x <= kSeriesLimit) return static_cast<double>(seriesJ(order.value(), x));
    if (order.isInteger()) return millerInteger(order.twice() / 2, x);
    return millerHalfInteger(order.twice() / 2, x);
}

std::vector<double> besselJSequence(int nmax, double x) {
    if (nmax < 0) throw DomainError("negative maximum order");
    checkArgument(x);
    if (x == 0.0) {
        std::vector<double> out(nmax + 1, 0.0);
        out[0] = 1.0;
        return out;
    }
    return millerIntegerSequence(x, nmax);
}

double besselJDerivative(BesselOrder order, double x) {
    checkOrder(order);
    checkArgument(x);
    const double nu = order.value();
    if (x == 0.0) {
        if (order.twice() == 2) return 0.5;
        if (order.twice() == 1) throw DomainError("J_{1/2}' is singular at 0");
        return 0.0;
    }
    if (order.twice() + 2 > 2 * kMaxOrder) {
        // (J_{ν-1} - J_{ν+1})/2 with J_{ν+1} from the three-term recurrence
        const double jm = besselJ(BesselOrder::fromTwice(order.twice() - 2), x);
        const double j = besselJ(order, x);
        return jm - nu / x * j;
    }
    return nu / x * besselJ(order, x) - besselJ(BesselOrder::fromTwice(order.twice() + 2), x);
}

double besselZero(BesselOrder order, int k) {
    checkOrder(order);
    if (k < 1 || k > kMaxZeroIndex) throw DomainError("zero index outside [1, 100]");
    const double nu = order.value();
    Fn f = [order](double x) { return besselJ(order, x); };
    Fn df = [order](double x) { return besselJDerivative(order, x); };
    // no zeros in (0, ν]
    return kthSignChange(f, df, std::max(nu, 0.5), k, mcMahon(nu, k));
}

double besselDerivativeZero(int order, int k) {
    if (order < 0 || order + 1 > kMaxOrder) throw DomainError("derivative-zero order outside range");
    if (k < 1 || k > kMaxZeroIndex) throw DomainError("zero index outside [1, 100]");
    if (order == 0) return besselZero(1, k);
    Fn f = [order](double x) { return besselJDerivative(order, x); };
    Fn df = [order](double x) {
        // J'' = -J'/x - (1 - m²/x²) J
        const double j = besselJ(order, x);
        const double jp = besselJDerivative(order, x);
        return -jp / x - (1.0 - double(order) * order / (x * x)) * j;
    };
    const double mu = 4.0 * order * order;
    const double beta = (k + 0.5 * order - 0.75) * std::numbers::pi;
    const double guess = beta - (mu + 3.0) / (8.0 * beta);
    return kthSignChange(f, df, static_cast<double>(order), k, guess);
}

double struveH(int n, double x) {
    if (n != 0 && n != 1) throw DomainError("Struve order must be 0 or 1");
    if (!(x >= 0.0) || x > kStruveMaxArg * (1.0 + 1e-12))
        throw DomainError("Struve argument outside [0, 4π]");
    if (x == 0.0) return 0.0;
    const long double half = static_cast<long double>(x) / 2;
    const long double q = -half * half;
    const long double a0 = 1.5L;
    const long double b0 = n + 1.5L;
    long double term = std::pow(half, n + 1) / (std::tgamma(a0) * std::tgamma(b0));
    long double sum = term;
    for (int k = 0; k < 400; ++k) {
        term *= q / ((k + a0) * (k + b0));
        sum += term;
        if (std::fabs(term) <= 1e-22L * std::fabs(sum) && k > half) break;
    }
    return static_cast<double>(sum);
}

double xJ1Antiderivative(double x) {
    checkArgument(x);
    if (x == 0.0) return 0.0;
    if (x <= kStruveMaxArg) {
        return std::numbers::pi * x / 2.0 *
               (besselJ(1, x) * struveH(0, x) - besselJ(0, x) * struveH(1, x));
    }
    // ∫₀ˣ J₀ = 2 Σ_k J_{2k+1}(x)
    const int nmax = millerStart(1.0, x);
    const auto seq = millerIntegerSequence(x, nmax);
    long double integral = 0.0L;
    for (int k = 1; k <= nmax; k += 2) integral += 2.0L * seq[k];
    return static_cast<double>(-x * static_cast<long double>(seq[0]) + integral);
}

BesselMoments besselMoments(double x) {
    checkArgument(x);
    if (x == 0.0) return {0.0, 0.0, 0.0};
    // 1 - J0 loses digits for small x; use the series directly.
    const double i0 = x < 1.0 ? static_cast<double>(1.0L - seriesJ(0.0L, x)) : 1.0 - besselJ(0, x);
    return {i0, xJ1Antiderivative(x), x * x * besselJ(2, x)};
}

namespace constants {
double j01() { static const double v = besselZero(0, 1); return v; }
double j02() { static const double v = besselZero(0, 2); return v; }
double j03() { static const double v = besselZero(0, 3); return v; }
double j11() { static const double v = besselZero(1, 1); return v; }
double j12() { static const double v = besselZero(1, 2); return v; }
double j11Prime() { static const double v = besselDerivativeZero(1, 1); return v; }
}  // namespace constants

}  // namespace nullvar::special
