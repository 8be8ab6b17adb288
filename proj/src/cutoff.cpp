#include "fracspec/cutoff.hpp"

#include <cmath>
#include <stdexcept>

namespace fracspec {

namespace {

double poly_eval(const std::vector<double>& c, double t) {
    double v = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * t + c[k];
    return v;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(k * c[k]);
    return d;
}

} // namespace

CutoffProfile::CutoffProfile() : coeff_{0.0, 0.0, 0.0, 10.0, -15.0, 6.0} {
    d1_ = poly_derivative(coeff_);
    d2_ = poly_derivative(d1_);
    // Measure the C^2 norm by dense sampling of the ramp.
    const int samples = 1 << 16;
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double t = static_cast<double>(i) / samples;
        m0 = std::max(m0, std::abs(poly_eval(coeff_, t)));
        m1 = std::max(m1, std::abs(poly_eval(d1_, t)));
        m2 = std::max(m2, std::abs(poly_eval(d2_, t)));
    }
    lip_norm_ = m1;
    c2_norm_ = std::max({m0, m1, m2});
}

double CutoffProfile::eval(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return poly_eval(coeff_, t);
}

double CutoffProfile::derivative(double t) const {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return poly_eval(d1_, t);
}

double CutoffProfile::second_derivative(double t) const {
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return poly_eval(d2_, t);
}

const CutoffProfile& cutoff_profile() {
    static const CutoffProfile profile;
    return profile;
}

double eta0(double t) { return cutoff_profile().eval(t); }

double w_sigma_at(const Domain& d, double sigma, const Point& x) {
    if (!(sigma > 0.0)) throw std::invalid_argument("w_sigma: sigma must be > 0");
    if (!d.contains(x)) return 0.0;
    return eta0(d.distance_to_boundary(x) / sigma);
}

GridFunction w_sigma(const Domain& d, double sigma, const Grid& g) {
    if (!(sigma >= 4.0 * g.h))
        throw std::invalid_argument("w_sigma: resolution guard requires sigma >= 4h");
    GridFunction f;
    f.grid = g;
    f.domain = &d;
    f.values.resize(g.size(), 0.0);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const Point x = g.node(i, j);
            if (d.contains(x)) f.values[g.index(i, j)] = eta0(d.distance_to_boundary(x) / sigma);
        }
    return f;
}

} // namespace fracspec
