#pragma once

// A named numerical comparison with a signed margin (positive = slack).

#include <cmath>
#include <string>

namespace nullvar {

struct Check {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string relation;  ///< "<=", ">=", "<", ">", "~="
    double margin = 0.0;
    double tolerance = 0.0;  ///< the check passes when margin >= -tolerance
    bool applicable = true;
    bool pass = true;
};

inline Check checkLE(std::string name, double lhs, double rhs, double tol = 0.0, std::string rel = "<=") {
    const double m = rhs - lhs;
    return {std::move(name), lhs, rhs, std::move(rel), m, tol, true, m >= -tol};
}

inline Check checkGE(std::string name, double lhs, double rhs, double tol = 0.0, std::string rel = ">=") {
    const double m = lhs - rhs;
    return {std::move(name), lhs, rhs, std::move(rel), m, tol, true, m >= -tol};
}

/// |lhs − rhs| ≤ tol; the margin is tol − |lhs − rhs|.
inline Check checkNear(std::string name, double lhs, double rhs, double tol) {
    const double m = tol - std::abs(lhs - rhs);
    return {std::move(name), lhs, rhs, "~=", m, 0.0, true, m >= 0.0};
}

inline Check notApplicable(Check c) {
    c.applicable = false;
    c.pass = true;
    return c;
}

}  // namespace nullvar
