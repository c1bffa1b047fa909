#pragma once

// Bessel functions of integer and half-integer order, their zeros, the Struve
// functions H0/H1 and the closed-form moments of J1 used by the proof
// machinery. Everything here is pure and reentrant.

#include <vector>

namespace nullvar::special {

/// Order of a Bessel function: a non-negative integer or half-integer, stored
/// as twice its value so that half-integers stay exact.
class BesselOrder {
public:
    constexpr BesselOrder(int n) : twice_(2 * n) {}  // NOLINT: integer orders convert implicitly

    static constexpr BesselOrder fromTwice(int twice) {
        BesselOrder o(0);
        o.twice_ = twice;
        return o;
    }
    /// n + 1/2
    static constexpr BesselOrder halfInteger(int n) { return fromTwice(2 * n + 1); }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool isInteger() const { return twice_ % 2 == 0; }

    friend constexpr bool operator==(BesselOrder, BesselOrder) = default;

private:
    int twice_;
};

/// Largest supported order.
inline constexpr int kMaxOrder = 60;
/// Largest supported zero index.
inline constexpr int kMaxZeroIndex = 100;
/// Struve functions are evaluated by power series on [0, kStruveMaxArg].
inline constexpr double kStruveMaxArg = 12.566370614359172;  // 4π

/// J_ν(x) for x ≥ 0. Ascending series for x ≤ 12, Miller backward recurrence
/// beyond. Throws DomainError for negative or non-finite x and for orders
/// outside [0, kMaxOrder].
double besselJ(BesselOrder order, double x);

/// J_0(x) .. J_nmax(x) in one backward-recurrence sweep; nmax is not limited
/// by kMaxOrder. Used to fill basis matrices.
std::vector<double> besselJSequence(int nmax, double x);

/// d/dx J_ν(x).
double besselJDerivative(BesselOrder order, double x);

/// k-th positive zero j_{ν,k}, k = 1..kMaxZeroIndex.
double besselZero(BesselOrder order, int k);

/// k-th positive zero of J_m' for integer m (j'_{0,k} = j_{1,k}, x = 0 excluded).
double besselDerivativeZero(int order, int k);

/// Struve function H_n for n ∈ {0, 1} on [0, 4π].
double struveH(int n, double x);

struct BesselMoments {
    double I0;  ///< ∫₀ˣ J₁(t) dt
    double I1;  ///< ∫₀ˣ t J₁(t) dt
    double I2;  ///< ∫₀ˣ t² J₁(t) dt
};

/// Closed-form moments of J₁ on [0, x]:
///   I0 = 1 − J₀(x),  I1 = (πx/2)(J₁H₀ − J₀H₁),  I2 = x² J₂(x).
/// Beyond the Struve range I1 falls back to −xJ₀(x) + 2Σ J_{2k+1}(x).
BesselMoments besselMoments(double x);

/// Antiderivative of t·J₁(t) vanishing at 0.
double xJ1Antiderivative(double x);

/// Frequently used zeros, computed once.
namespace constants {
double j01();
double j02();
double j03();
double j11();
double j12();
/// First zero of J₁'.
double j11Prime();
}  // namespace constants

}  // namespace nullvar::special
