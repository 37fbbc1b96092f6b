#pragma once

#include <functional>

namespace kleinlab::quad {

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

// Adaptive Gauss-Kronrod 15(7) with interval bisection. Throws
// NumericalError if the tolerance cannot be reached within budget.
Result integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-11, double abs_tol = 0.0);

// Deliberately independent second route: composite 32-point Gauss-Legendre
// on a uniform panel split, panel count doubling until two successive
// estimates agree. Different nodes, different acceptance logic.
Result integrate_composite(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-11, double abs_tol = 0.0);

} // namespace kleinlab::quad
