#pragma once

#include "fracspec/grid.hpp"

#include <vector>

namespace fracspec {

/// C^2 ramp eta0: 0 for t <= 0, 1 for t >= 1, nondecreasing, with vanishing
/// one-sided first and second derivatives at both ends. Realized as the
/// quintic 10 t^3 - 15 t^4 + 6 t^5 on [0, 1].
class CutoffProfile {
  public:
    CutoffProfile();

    double eval(double t) const;
    double derivative(double t) const;
    double second_derivative(double t) const;

    /// Measured sup over [0,1] of max(|eta0|, |eta0'|, |eta0''|). About
    /// 5.77 for the quintic; every bound that the literature states with a
    /// C^2-norm constant carries this measured value explicitly.
    double c2_norm() const { return c2_norm_; }

    /// Measured sup of |eta0'| (about 1.875); the Lipschitz constant of
    /// w_sigma is this divided by sigma.
    double lipschitz_norm() const { return lip_norm_; }

    const std::vector<double>& coefficients() const { return coeff_; }

  private:
    std::vector<double> coeff_; // ascending powers on [0,1]
    std::vector<double> d1_, d2_;
    double c2_norm_ = 0.0;
    double lip_norm_ = 0.0;
};

/// Shared profile instance (the profile is stateless after construction).
const CutoffProfile& cutoff_profile();

/// eta0 through the shared profile.
double eta0(double t);

/// w_sigma(x) = eta0(rho(x)/sigma) inside the domain, 0 outside; ramps from
/// 0 at the boundary to 1 at depth sigma.
double w_sigma_at(const Domain& d, double sigma, const Point& x);

/// w_sigma sampled on a grid. Requires sigma >= 4h so the ramp spans at
/// least four cells.
GridFunction w_sigma(const Domain& d, double sigma, const Grid& g);

} // namespace fracspec
