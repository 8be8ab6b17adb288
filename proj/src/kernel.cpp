#include "fracspec/kernel.hpp"

#include "fracspec/parallel.hpp"
#include "fracspec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracspec {

namespace {

// Radial primitive: int_a^b r^(-1-2s) dr, for 0 < a <= b.
double radial_piece(double a, double b, double two_s) {
    if (!(b > a)) return 0.0;
    return (std::pow(a, -two_s) - std::pow(b, -two_s)) / two_s;
}

// Ray through the origin at angle th against the box [x0,x1]x[y0,y1]
// (x0 > 0). Returns the radial interval [rin, rout], empty as {0, 0}.
struct RaySpan {
    double rin = 0.0, rout = 0.0;
    bool hit = false;
};

RaySpan ray_box(double th, double x0, double x1, double y0, double y1) {
    const double c = std::cos(th), sn = std::sin(th);
    RaySpan span;
    if (!(c > 0.0)) return span;
    double rlo = x0 / c, rhi = x1 / c;
    if (sn > 0.0) {
        rlo = std::max(rlo, y0 / sn);
        rhi = std::min(rhi, y1 / sn);
    } else if (sn < 0.0) {
        rlo = std::max(rlo, y1 / sn);
        rhi = std::min(rhi, y0 / sn);
    } else {
        if (y0 > 0.0 || y1 < 0.0) return span;
    }
    if (rhi <= std::max(rlo, 0.0)) return span;
    span.rin = std::max(rlo, 0.0);
    span.rout = rhi;
    span.hit = true;
    return span;
}

// Polar integration of |zeta|^(-2-2s) over box-cell intersected with the
// disc of radius r_far. Exact radial primitive; Gauss panels in the angle,
// split at box corner angles and at crossings of the truncation circle.
double polar_cell_weight(double cx, double cy, double h, double two_s, double r_far) {
    const double x0 = cx - 0.5 * h, x1 = cx + 0.5 * h;
    const double y0 = cy - 0.5 * h, y1 = cy + 0.5 * h;

    double corner_angles[4] = {std::atan2(y0, x0), std::atan2(y0, x1),
                               std::atan2(y1, x0), std::atan2(y1, x1)};
    std::sort(corner_angles, corner_angles + 4);

    auto clipped = [&](double th) {
        const RaySpan sp = ray_box(th, x0, x1, y0, y1);
        if (!sp.hit || sp.rin >= r_far) return 0.0;
        return radial_piece(sp.rin, std::min(sp.rout, r_far), two_s);
    };

    std::vector<double> brk(corner_angles, corner_angles + 4);
    // Locate angles where the circle r = r_far crosses the cell edges.
    for (int seg = 0; seg < 3; ++seg) {
        const double a = corner_angles[seg], b = corner_angles[seg + 1];
        if (!(b > a + 1e-15)) continue;
        const int scan = 16;
        auto f = [&](double th) {
            const RaySpan sp = ray_box(th, x0, x1, y0, y1);
            if (!sp.hit) return 0.0;
            return sp.rout - r_far;
        };
        double prev_th = a + (b - a) * 1e-9, prev = f(prev_th);
        for (int i = 1; i <= scan; ++i) {
            const double th = a + (b - a) * (i - (i == scan ? 1e-9 : 0.0)) / scan;
            const double cur = f(th);
            if (prev * cur < 0.0) {
                double lo = prev_th, hi = th;
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (f(lo) * f(mid) <= 0.0)
                        hi = mid;
                    else
                        lo = mid;
                }
                brk.push_back(0.5 * (lo + hi));
            }
            prev_th = th;
            prev = cur;
        }
        // same scan for the entry radius (cells may start beyond r_far)
        auto g = [&](double th) {
            const RaySpan sp = ray_box(th, x0, x1, y0, y1);
            if (!sp.hit) return 0.0;
            return sp.rin - r_far;
        };
        prev_th = a + (b - a) * 1e-9;
        prev = g(prev_th);
        for (int i = 1; i <= scan; ++i) {
            const double th = a + (b - a) * (i - (i == scan ? 1e-9 : 0.0)) / scan;
            const double cur = g(th);
            if (prev * cur < 0.0) {
                double lo = prev_th, hi = th;
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if (g(lo) * g(mid) <= 0.0)
                        hi = mid;
                    else
                        lo = mid;
                }
                brk.push_back(0.5 * (lo + hi));
            }
            prev_th = th;
            prev = cur;
        }
    }
    std::sort(brk.begin(), brk.end());

    const GaussRule& rule = gauss_legendre(16);
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < brk.size(); ++p) {
        const double a = brk[p], b = brk[p + 1];
        if (!(b > a + 1e-15)) continue;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            sum += rule.weights[i] * clipped(mid + half * rule.nodes[i]);
        total += sum * half;
    }
    return total;
}

// 2-point Gauss per axis for smooth far cells fully inside the disc.
double gauss_cell_weight(double cx, double cy, double h, double np2s) {
    static const double g = 0.5 / std::sqrt(3.0);
    double sum = 0.0;
    for (int a = -1; a <= 1; a += 2)
        for (int b = -1; b <= 1; b += 2)
            sum += std::pow(std::hypot(cx + a * g * h, cy + b * g * h), -np2s);
    return sum * 0.25 * h * h;
}

} // namespace

QuadratureScheme make_scheme(int N, FractionalOrder s, double h,
                             const BoundingBox& bb, double r_far) {
    if (N != 1 && N != 2) throw std::invalid_argument("make_scheme: N must be 1 or 2");
    if (!(h > 0.0)) throw std::invalid_argument("make_scheme: h must be > 0");
    QuadratureScheme q;
    q.N = N;
    q.s = s.value();
    q.h = h;
    const double diam = bb.diameter(N);
    q.r_far = (r_far > 0.0) ? r_far : diam + 2.0;
    if (q.r_far < diam)
        throw std::invalid_argument("make_scheme: r_far below bounding-box diameter");
    q.tail_coefficient = c_ns(N, s) * sphere_area(N) *
                         std::pow(q.r_far, -2.0 * q.s) / (2.0 * q.s);
    return q;
}

KernelTable::KernelTable(const QuadratureScheme& q) : q_(q) {
    c_ = fracspec::c_ns(q.N, FractionalOrder(q.s));
    const double h = q.h, two_s = 2.0 * q.s;
    const double half_diag = (q.N == 1 ? 0.5 : 0.5 * std::sqrt(2.0)) * h;
    max_m_ = static_cast<int>(std::floor((q.r_far + half_diag) / h)) + 1;

    if (q.N == 1) {
        w_.assign(max_m_ + 1, 0.0);
        weight_sum_ = 0.0;
        for (int m = 1; m <= max_m_; ++m) {
            const double a = (m - 0.5) * h;
            if (a >= q.r_far) break;
            const double b = std::min((m + 0.5) * h, q.r_far);
            w_[m] = radial_piece(a, b, two_s);
            weight_sum_ += 2.0 * w_[m];
        }
        // int_{-h/2}^{h/2} |z|^(1-2s) dz
        i0_ = 2.0 * std::pow(0.5 * h, 2.0 - two_s) / (2.0 - two_s);
        return;
    }

    const int side = max_m_ + 1;
    w_.assign(static_cast<std::size_t>(side) * side, 0.0);
    const double np2s = q.N + two_s;
    // canonical quadrant mx >= my >= 0, mx >= 1; mirrored on lookup
    parallel_for(static_cast<std::size_t>(max_m_), [&](std::size_t t) {
        const int mx = static_cast<int>(t) + 1;
        for (int my = 0; my <= mx; ++my) {
            const double cx = mx * h, cy = my * h;
            const double rc = std::hypot(cx, cy);
            if (rc - half_diag >= q.r_far) continue;
            const bool ring = (mx <= 1 && my <= 1);
            const bool straddle = (rc + half_diag > q.r_far);
            double val;
            if (ring || straddle)
                val = polar_cell_weight(cx, cy, h, two_s, q.r_far);
            else
                val = gauss_cell_weight(cx, cy, h, np2s);
            w_[static_cast<std::size_t>(my) * side + mx] = val;
        }
    });
    weight_sum_ = 0.0;
    for (int mx = -max_m_; mx <= max_m_; ++mx)
        for (int my = -max_m_; my <= max_m_; ++my) {
            if (mx == 0 && my == 0) continue;
            weight_sum_ += weight(mx, my);
        }
    // int over the singular cell of |zeta|^(-2s): eight symmetric wedges
    const double sec_int = integrate_gl(
        [two_s](double th) { return std::pow(std::cos(th), two_s - 2.0); }, 0.0,
        0.25 * M_PI, 16);
    i0_ = 8.0 * std::pow(0.5 * h, 2.0 - two_s) / (2.0 - two_s) * sec_int;
}

double KernelTable::weight(int mx, int my) const {
    int ax = std::abs(mx), ay = std::abs(my);
    if (ax < ay) std::swap(ax, ay);
    if (ax == 0 || ax > max_m_) return 0.0;
    if (q_.N == 1) return (ay == 0) ? w_[ax] : 0.0;
    if (ay > max_m_) return 0.0;
    return w_[static_cast<std::size_t>(ay) * (max_m_ + 1) + ax];
}

} // namespace fracspec
