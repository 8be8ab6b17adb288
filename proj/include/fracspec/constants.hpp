#pragma once

#include <optional>
#include <string>

namespace fracspec {

/// Fractional order s, restricted to the open interval (0, 1).
class FractionalOrder {
  public:
    explicit FractionalOrder(double s);
    double value() const { return s_; }

  private:
    double s_;
};

/// Gamma function on (0, 171). Throws std::domain_error for x <= 0 and
/// std::out_of_range where the result would overflow a double.
double gamma_fn(double x);

/// Normalization constant of the singular-integral operator,
/// c_{N,s} = 2^{2s} pi^{-N/2} s Gamma((N+2s)/2) / Gamma(1-s).
double c_ns(int N, FractionalOrder s);

/// Area of the unit sphere S^{N-1}: 2 pi^{N/2} / Gamma(N/2), with the
/// one-dimensional convention omega_0 = 2 (counting measure of S^0).
double sphere_area(int N);

/// Volume of the unit ball, sphere_area(N)/N. Single source of truth for
/// |B_1| throughout the library.
double ball_volume(int N);

/// E_m(m+2s) = int_0^inf t^(m-2) (1+t^2)^(-(m+2s)/2) dt, m >= 2, evaluated
/// by the closed-form base cases and the two-step recursion
/// E_m = (m-3)/(m+2s-2) * E_{m-2}.
double e_m(int m, FractionalOrder s);

/// Same integral evaluated by adaptive quadrature (tail folded onto [0,1]
/// via t -> 1/t). Independent cross-check for the recursion path.
double e_m_quadrature(int m, FractionalOrder s, double abs_tol = 1e-10);

/// b_N(s) = 2/Gamma(s+1/2) * Gamma((N+2s)/2)/Gamma((N-1)/2) * E_N(N+2s)
/// for N >= 2, and identically 1 for N = 1. Equals 1 for every admissible
/// (N, s); evaluated here so the identity can be verified numerically.
double b_ns(int N, FractionalOrder s);

/// b_N(s) with E_N evaluated by quadrature instead of the recursion.
double b_ns_quadrature(int N, FractionalOrder s);

/// All scalar constants attached to a given (N, s).
struct ConstantsTable {
    int N = 0;
    double s = 0.0;
    double c_ns = 0.0;
    double omega_nm1 = 0.0;           // area of S^{N-1}
    double vol_b1 = 0.0;              // |B_1| = omega_nm1 / N
    std::optional<double> e_n;        // E_N(N+2s); the integral diverges for N = 1
    double b_ns = 0.0;
};

ConstantsTable make_constants_table(int N, FractionalOrder s);

} // namespace fracspec
