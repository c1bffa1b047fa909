#pragma once

#include <stdexcept>
#include <string>

namespace nullvar {

/// Argument outside the documented domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A domain description violating its own invariants (degenerate, non-convex polygon, ...).
class InvalidDomain : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A valid domain that the requested operation does not handle.
class UnsupportedDomain : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative method failed to converge or certify its result.
class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace nullvar
