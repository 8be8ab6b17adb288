#pragma once

#include "fracspec/constants.hpp"
#include "fracspec/geometry.hpp"

#include <string>
#include <vector>

namespace fracspec {

/// Discretization parameters for the singular-kernel quadrature: grid step,
/// near-field correction tag, far-field truncation radius and the analytic
/// coefficient of the tail beyond it.
struct QuadratureScheme {
    int N = 1;
    double s = 0.5;
    double h = 0.0;
    double r_far = 0.0;
    std::string near_correction = "second-difference-taylor";
    double tail_coefficient = 0.0; // c_{N,s} * omega_{N-1} * r_far^{-2s} / (2s)
};

/// r_far defaults to diameter(bounding box) + 2, which makes the analytic
/// tail exact for functions supported inside the box.
QuadratureScheme make_scheme(int N, FractionalOrder s, double h,
                             const BoundingBox& bb, double r_far = 0.0);

/// Translation-invariant kernel weights: for each lattice offset m the
/// integral of |zeta|^(-N-2s) over the offset cell, clipped to the ball
/// |zeta| <= r_far. One-dimensional cells integrate in closed form; in 2D
/// far cells use 2-point Gauss per axis and cells adjacent to the singular
/// cell (or straddling the truncation circle) use polar quadrature with
/// Gauss panels between the corner angles.
class KernelTable {
  public:
    explicit KernelTable(const QuadratureScheme& q);

    const QuadratureScheme& scheme() const { return q_; }
    int max_offset() const { return max_m_; }

    /// Cell weight for offset (mx, my); zero when the cell lies entirely
    /// beyond r_far. Symmetric in signs and (in 2D) in axis swap.
    double weight(int mx, int my = 0) const;

    /// Sum of weights over every nonzero lattice offset.
    double weight_sum() const { return weight_sum_; }

    /// Singular-cell moment integral int_cell |zeta|^(2-N-2s) dzeta feeding
    /// the Taylor-corrected near-field weight.
    double i0() const { return i0_; }

    double c_ns() const { return c_; }

  private:
    QuadratureScheme q_;
    double c_ = 0.0;
    int max_m_ = 0;
    std::vector<double> w_; // canonical quadrant, (my * (max_m_+1) + mx)
    double weight_sum_ = 0.0;
    double i0_ = 0.0;
};

} // namespace fracspec
