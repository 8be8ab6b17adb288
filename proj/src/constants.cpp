#include "fracspec/constants.hpp"

#include "fracspec/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace fracspec {

FractionalOrder::FractionalOrder(double s) : s_(s) {
    if (!(s > 0.0) || !(s < 1.0))
        throw std::invalid_argument("FractionalOrder: s must lie in (0,1)");
}

double gamma_fn(double x) {
    if (!(x > 0.0))
        throw std::domain_error("gamma_fn: requires x > 0");
    if (x > 171.0)
        throw std::out_of_range("gamma_fn: overflow for x > 171");
    return std::tgamma(x);
}

double c_ns(int N, FractionalOrder s) {
    if (N < 1) throw std::invalid_argument("c_ns: N must be >= 1");
    const double sv = s.value();
    return std::pow(2.0, 2.0 * sv) * std::pow(M_PI, -0.5 * N) * sv *
           gamma_fn(0.5 * (N + 2.0 * sv)) / gamma_fn(1.0 - sv);
}

double sphere_area(int N) {
    if (N < 1) throw std::invalid_argument("sphere_area: N must be >= 1");
    return 2.0 * std::pow(M_PI, 0.5 * N) / gamma_fn(0.5 * N);
}

double ball_volume(int N) { return sphere_area(N) / N; }

double e_m(int m, FractionalOrder s) {
    if (m < 2) throw std::invalid_argument("e_m: m must be >= 2");
    const double sv = s.value();
    // Base cases E_2 = (1/2) B(1/2, s+1/2) and E_3 = 1/(1+2s).
    double value = (m % 2 == 0)
                       ? 0.5 * gamma_fn(0.5) * gamma_fn(sv + 0.5) / gamma_fn(1.0 + sv)
                       : 1.0 / (1.0 + 2.0 * sv);
    for (int n = (m % 2 == 0) ? 4 : 5; n <= m; n += 2)
        value *= (n - 3.0) / (n + 2.0 * sv - 2.0);
    return value;
}

double e_m_quadrature(int m, FractionalOrder s, double abs_tol) {
    if (m < 2) throw std::invalid_argument("e_m_quadrature: m must be >= 2");
    const double sv = s.value();
    const double p = 0.5 * (m + 2.0 * sv);
    // Substituting t -> 1/t maps the tail onto [0,1]:
    //   int_1^inf t^(m-2)(1+t^2)^(-p) dt = int_0^1 t^(2s)(1+t^2)^(-p) dt.
    auto f = [m, sv, p](double t) {
        return (std::pow(t, m - 2.0) + std::pow(t, 2.0 * sv)) *
               std::pow(1.0 + t * t, -p);
    };
    return adaptive_integrate(f, 0.0, 1.0, abs_tol);
}

namespace {

double b_from_e(int N, double sv, double e_value) {
    return 2.0 / gamma_fn(sv + 0.5) * gamma_fn(0.5 * (N + 2.0 * sv)) /
           gamma_fn(0.5 * (N - 1.0)) * e_value;
}

} // namespace

double b_ns(int N, FractionalOrder s) {
    if (N < 1) throw std::invalid_argument("b_ns: N must be >= 1");
    if (N == 1) return 1.0;
    return b_from_e(N, s.value(), e_m(N, s));
}

double b_ns_quadrature(int N, FractionalOrder s) {
    if (N < 1) throw std::invalid_argument("b_ns_quadrature: N must be >= 1");
    if (N == 1) return 1.0;
    return b_from_e(N, s.value(), e_m_quadrature(N, s));
}

ConstantsTable make_constants_table(int N, FractionalOrder s) {
    ConstantsTable t;
    t.N = N;
    t.s = s.value();
    t.c_ns = c_ns(N, s);
    t.omega_nm1 = sphere_area(N);
    t.vol_b1 = ball_volume(N);
    if (N >= 2) t.e_n = e_m(N, s);
    t.b_ns = b_ns(N, s);
    return t;
}

} // namespace fracspec
