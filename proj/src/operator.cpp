#include "fracspec/operator.hpp"

#include "fracspec/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace fracspec {

Complex apply_pointwise(const PointFn& u, const Point& x, const KernelTable& table) {
    const QuadratureScheme& q = table.scheme();
    const double h = q.h;
    const int M = table.max_offset();
    const Complex ux = u(x);
    if (!std::isfinite(ux.real()) || !std::isfinite(ux.imag()))
        throw std::runtime_error("apply_pointwise: non-finite sample at x");

    Complex acc{0.0, 0.0};
    auto add_pair = [&](int mx, int my) {
        const double w = table.weight(mx, my);
        if (w == 0.0) return;
        const Point xp{x[0] + mx * h, x[1] + my * h};
        const Point xm{x[0] - mx * h, x[1] - my * h};
        acc += w * (2.0 * ux - u(xp) - u(xm));
    };
    if (q.N == 1) {
        for (int m = 1; m <= M; ++m) add_pair(m, 0);
    } else {
        // half lattice: (mx > 0) or (mx == 0, my > 0)
        for (int my = 1; my <= M; ++my) add_pair(0, my);
        for (int mx = 1; mx <= M; ++mx)
            for (int my = -M; my <= M; ++my) add_pair(mx, my);
    }
    if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag()))
        throw std::runtime_error("apply_pointwise: non-finite quadrature sum");

    // Taylor-corrected singular cell: the second-difference stencil at the
    // grid step carries int_cell |zeta|^(2-N-2s) / (N h^2).
    Complex sing{0.0, 0.0};
    {
        const double coef = table.i0() / (q.N * h * h);
        sing += coef * (2.0 * ux - u({x[0] + h, x[1]}) - u({x[0] - h, x[1]}));
        if (q.N == 2)
            sing += coef * (2.0 * ux - u({x[0], x[1] + h}) - u({x[0], x[1] - h}));
    }
    return table.c_ns() * (acc + 0.5 * sing) + q.tail_coefficient * ux;
}

double apply_grid(const GridFunction& f, int i, int j, const KernelTable& table) {
    const QuadratureScheme& q = table.scheme();
    const Grid& g = f.grid;
    const int M = table.max_offset();
    const double fx = f.at(i, j);

    auto sample = [&](int ii, int jj) -> double {
        if (ii < 0 || ii >= g.nx || jj < 0 || jj >= g.ny) return 0.0;
        return f.values[g.index(ii, jj)];
    };

    double acc = 0.0;
    if (q.N == 1) {
        for (int m = 1; m <= M; ++m) {
            const double w = table.weight(m, 0);
            if (w == 0.0) continue;
            acc += w * (2.0 * fx - sample(i + m, 0) - sample(i - m, 0));
        }
    } else {
        auto add_pair = [&](int mx, int my) {
            const double w = table.weight(mx, my);
            if (w == 0.0) return;
            acc += w * (2.0 * fx - sample(i + mx, j + my) - sample(i - mx, j - my));
        };
        for (int my = 1; my <= M; ++my) add_pair(0, my);
        for (int mx = 1; mx <= M; ++mx)
            for (int my = -M; my <= M; ++my) add_pair(mx, my);
    }

    double sing = 0.0;
    {
        const double coef = table.i0() / (q.N * q.h * q.h);
        sing += coef * (2.0 * fx - sample(i + 1, j) - sample(i - 1, j));
        if (q.N == 2) sing += coef * (2.0 * fx - sample(i, j + 1) - sample(i, j - 1));
    }
    return table.c_ns() * (acc + 0.5 * sing) + q.tail_coefficient * fx;
}

AssembledOperator assemble_matrix(const Domain& d, FractionalOrder s, int cells_across) {
    AssembledOperator op;
    op.grid = make_grid(d, cells_across);
    const Grid& g = op.grid;
    const int per_axis_min = 4;
    {
        // the domain must be resolved by at least a few interior nodes per axis
        const BoundingBox bb = d.bounding_box();
        if ((bb.hi[0] - bb.lo[0]) / g.h < per_axis_min)
            throw std::invalid_argument("assemble_matrix: grid too coarse for the domain");
    }
    op.scheme = make_scheme(d.dimension(), s, g.h, g.box());
    op.interior = interior_nodes(g, d);
    const std::size_t n = op.interior.size();
    if (n == 0) throw std::invalid_argument("assemble_matrix: no interior nodes");

    const KernelTable table(op.scheme);
    const double c = table.c_ns();
    const double h = g.h;
    const double near = table.i0() / (op.scheme.N * h * h);
    const double diag = c * (table.weight_sum() + table.i0() / (h * h)) +
                        op.scheme.tail_coefficient;

    // node coordinates of the interior set
    std::vector<int> gi(n), gj(n);
    for (std::size_t k = 0; k < n; ++k) {
        gi[k] = static_cast<int>(op.interior[k] % g.nx);
        gj[k] = static_cast<int>(op.interior[k] / g.nx);
    }

    op.matrix.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    Eigen::MatrixXd& A = op.matrix;
    parallel_for(n, [&](std::size_t r) {
        for (std::size_t col = 0; col < n; ++col) {
            if (col == r) {
                A(r, col) = diag;
                continue;
            }
            const int mx = gi[col] - gi[r];
            const int my = gj[col] - gj[r];
            double coupling = c * table.weight(mx, my);
            if (std::abs(mx) + std::abs(my) == 1) coupling += 0.5 * c * near;
            A(r, col) = -coupling;
        }
    });

    // action on the all-ones vector must stay positive at every node
    // (tail + exterior couplings); cheap coercivity sanity check
    for (std::size_t r = 0; r < n; ++r) {
        double row_sum = 0.0;
        for (std::size_t col = 0; col < n; ++col) row_sum += A(r, col);
        if (!(row_sum > 0.0))
            throw std::runtime_error("assemble_matrix: nonpositive row sum, assembly invalid");
    }
    return op;
}

Complex mixed_term(const Domain& d, double sigma, const Point& z, const Point& x,
                   const KernelTable& table) {
    if (!d.contains(x))
        throw std::invalid_argument("mixed_term: x must lie inside the domain");
    const QuadratureScheme& q = table.scheme();
    const double h = q.h;
    const int M = table.max_offset();
    const double wx = w_sigma_at(d, sigma, x);

    Complex acc{0.0, 0.0};
    auto add_cell = [&](int mx, int my) {
        const double w = table.weight(mx, my);
        if (w == 0.0) return;
        const Point xt{x[0] + mx * h, x[1] + my * h};
        const double dw = wx - w_sigma_at(d, sigma, xt);
        if (dw == 0.0) return;
        const double phase = (mx * z[0] + my * z[1]) * h;
        acc += w * dw * (Complex{std::cos(phase), std::sin(phase)} - 1.0);
    };
    if (q.N == 1) {
        for (int m = -M; m <= M; ++m)
            if (m != 0) add_cell(m, 0);
    } else {
        for (int mx = -M; mx <= M; ++mx)
            for (int my = -M; my <= M; ++my)
                if (mx != 0 || my != 0) add_cell(mx, my);
    }

    // Singular cell: (w(x)-w(x+zeta)) ~ -grad w . zeta and
    // (e^{i zeta z}-1) ~ i z . zeta give -i (grad w . z) I0 / N.
    const CutoffProfile& prof = cutoff_profile();
    const double rho = d.distance_to_boundary(x);
    const double dramp = prof.derivative(rho / sigma) / sigma;
    Complex sing{0.0, 0.0};
    if (dramp != 0.0) {
        const Point grad = d.rho_gradient(x);
        const double gz = dramp * (grad[0] * z[0] + grad[1] * z[1]);
        sing = Complex{0.0, -gz * table.i0() / q.N};
    }

    // Beyond r_far the cutoff vanishes and the oscillatory factor averages
    // out; the surviving -w(x) part has the analytic tail integral.
    const double tail = -wx * sphere_area(q.N) * std::pow(q.r_far, -2.0 * q.s) /
                        (2.0 * q.s);

    const Complex phase_x{std::cos(x[0] * z[0] + x[1] * z[1]),
                          std::sin(x[0] * z[0] + x[1] * z[1])};
    return table.c_ns() * phase_x * (acc + sing + tail);
}

double plane_wave_symbol(double z_norm, FractionalOrder s) {
    return std::pow(z_norm, 2.0 * s.value());
}

double cutoff_apply_bound(int N, FractionalOrder s, double sigma) {
    const double sv = s.value();
    const double c2 = cutoff_profile().c2_norm();
    return 0.5 * c_ns(N, s) * c2 * sphere_area(N) * std::pow(sigma, -2.0 * sv) *
           (1.0 / sv + 1.0 / (1.0 - sv));
}

namespace {

MixedTermBound mixed_bound(int N, FractionalOrder s, double sigma, double R,
                           double z_norm, double lip, double annulus_factor,
                           bool log_sigma, double far_term) {
    const double sv = s.value();
    const double omega = sphere_area(N);
    MixedTermBound b;
    b.near_term = lip * omega * std::pow(z_norm, 2.0 * sv - 1.0) / (2.0 - 2.0 * sv);
    if (sv > 0.5) {
        b.annulus_term = annulus_factor * lip * omega *
                         std::pow(z_norm, 2.0 * sv - 1.0) / (2.0 * sv - 1.0);
    } else if (sv == 0.5) {
        const double lg = std::log(z_norm) + std::log(4.0 * R);
        b.annulus_term = annulus_factor * (log_sigma ? lip : 1.0) * omega * lg;
    } else {
        b.annulus_term = annulus_factor * lip * omega *
                         std::pow(4.0 * R, 1.0 - 2.0 * sv) / (1.0 - 2.0 * sv);
    }
    b.far_term = far_term;
    const double c = c_ns(N, s);
    b.near_term *= c;
    b.annulus_term *= c;
    b.far_term *= c;
    return b;
}

} // namespace

MixedTermBound mixed_term_bound_proof(int N, FractionalOrder s, double sigma,
                                      double R, double z_norm) {
    if (!(z_norm > 1.0))
        throw std::invalid_argument("mixed_term_bound: requires |z| > 1");
    const double lip = cutoff_profile().lipschitz_norm() / sigma;
    const double far = 2.0 * sphere_area(N) * std::pow(R, -2.0 * s.value()) /
                       (2.0 * s.value());
    return mixed_bound(N, s, sigma, R, z_norm, lip, 2.0, true, far);
}

MixedTermBound mixed_term_bound_statement(int N, FractionalOrder s, double sigma,
                                          double R, double z_norm) {
    if (!(z_norm > 1.0))
        throw std::invalid_argument("mixed_term_bound: requires |z| > 1");
    const double sv = s.value();
    const double omega = sphere_area(N);
    MixedTermBound b;
    b.near_term = omega / (1.0 - sv) / sigma * std::pow(z_norm, 2.0 * sv - 1.0);
    if (sv > 0.5)
        b.annulus_term = omega / (2.0 * sv - 1.0) * std::pow(z_norm, 2.0 * sv - 1.0);
    else if (sv == 0.5)
        b.annulus_term = omega * (std::log(z_norm) + std::log(4.0 * R));
    else
        b.annulus_term = omega / (1.0 - 2.0 * sv) * std::pow(4.0 * R, 1.0 - 2.0 * sv);
    b.far_term = omega / (2.0 * sv) * std::pow(R, -2.0 * sv);
    const double c = c_ns(N, s);
    b.near_term *= c;
    b.annulus_term *= c;
    b.far_term *= c;
    return b;
}

} // namespace fracspec
