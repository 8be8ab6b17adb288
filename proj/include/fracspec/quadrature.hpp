#pragma once

#include <functional>
#include <vector>

namespace fracspec {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights;
};

/// Gauss-Legendre rule of order n (nodes computed once, cached).
const GaussRule& gauss_legendre(int n);

/// Fixed-order Gauss-Legendre integral of f over [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order = 16);

/// Adaptive bisection built on Gauss-Legendre panels. Absolute tolerance;
/// handles integrable endpoint singularities by subdivision.
double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_depth = 52);

} // namespace fracspec
