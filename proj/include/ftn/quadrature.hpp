#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ftn {

struct QuadratureSettings {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 2048;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw std::invalid_argument("QuadratureSettings: tolerances must be positive");
        if (max_subdivisions < 1)
            throw std::invalid_argument("QuadratureSettings: max_subdivisions must be positive");
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0; // absolute error estimate
    int subdivisions = 0;
};

/// Thrown when the adaptive scheme exhausts max_subdivisions before the
/// requested tolerance is met.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, QuadratureResult partial)
        : std::runtime_error(what), partial_(partial) {}
    const QuadratureResult& partial() const { return partial_; }

private:
    QuadratureResult partial_;
};

/// Adaptive Gauss-Kronrod (7,15) integration of f over [a, b].
/// Panels with the largest error estimate are bisected until the summed
/// error meets max(abs_tol, rel_tol*|integral|). Throws ConvergenceError
/// on failure to converge.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSettings& settings = {});

/// Same, with the initial panels split at the given interior breakpoints.
/// Breakpoints outside (a, b) are ignored; the list need not be sorted.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breakpoints,
                           const QuadratureSettings& settings = {});

} // namespace ftn
