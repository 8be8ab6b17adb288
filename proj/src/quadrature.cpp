#include "fracspec/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fracspec {

namespace {

// Legendre P_n and derivative by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp) {
    double pm1 = 1.0, pk = x;
    if (n == 0) { p = 1.0; dp = 0.0; return; }
    for (int k = 1; k < n; ++k) {
        double pk1 = ((2 * k + 1) * x * pk - k * pm1) / (k + 1);
        pm1 = pk;
        pk = pk1;
    }
    p = pk;
    dp = n * (x * pk - pm1) / (x * x - 1.0);
}

GaussRule build_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based initial guess, then Newton.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            legendre(n, x, p, dp);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre(n, x, p, dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

double panel(const std::function<double(double)>& f, double a, double b,
             const GaussRule& r) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        sum += r.weights[i] * f(mid + half * r.nodes[i]);
    return sum * half;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth, const GaussRule& rule, double whole) {
    const double mid = 0.5 * (a + b);
    const double left = panel(f, a, mid, rule);
    const double right = panel(f, mid, b, rule);
    if (depth <= 0 || std::abs(left + right - whole) <= tol)
        return left + right;
    return adapt(f, a, mid, 0.5 * tol, depth - 1, rule, left) +
           adapt(f, mid, b, 0.5 * tol, depth - 1, rule, right);
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 2) throw std::invalid_argument("gauss_legendre: order must be >= 2");
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    int order) {
    return panel(f, a, b, gauss_legendre(order));
}

double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_depth) {
    if (!(b > a)) return 0.0;
    const GaussRule& rule = gauss_legendre(15);
    return adapt(f, a, b, abs_tol, max_depth, rule, panel(f, a, b, rule));
}

} // namespace fracspec
