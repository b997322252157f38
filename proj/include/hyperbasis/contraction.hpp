#pragma once

// Flat-limit (R -> infinity) experiments: wavefunction limits (PS -> polar
// Bessel, EQ -> Cartesian cosine/sine, HO -> phase-shifted Cartesian),
// coefficient limits (U -> cos/sin m alpha, W -> stationary-phase form,
// V -> trigonometric forms), the Jacobi-Anger and Bessel-integral endpoint
// identities, and convergence-rate fitting.

#include <complex>
#include <vector>

#include "hyperbasis/errors.hpp"
#include "hyperbasis/interbasis.hpp"
#include "hyperbasis/verify.hpp"

namespace hyperbasis::contraction {

using Complex = std::complex<double>;

struct FlatParams {
    double k = 1.0;     // > 0
    double k1 = 0.0;    // k1^2 + k2^2 = k^2
    double k2 = 0.0;
    double alpha = 0.0; // k1 = k cos(alpha), k2 = k sin(alpha)

    static FlatParams from_angle(double k, double alpha);
    static FlatParams from_k1(double k, double k1, int k2_sign = +1);
    static FlatParams from_k2(double k, double k2, int k1_sign = +1);
};

struct ContractionCurve {
    std::vector<double> R_values;
    std::vector<double> errors;
    double fitted_exponent = 0.0;
    double fitted_prefactor = 0.0;
    bool degenerate = false; // identically-zero error curve (no fit possible)

    bool strictly_decreasing() const;
    void fit(); // least squares in log-log
};

// Contraction phase M = pi/4 + k R arcosh(k/|k2|) - |k1| R, requires
// k > |k2| > 0.
double phase_m(double k, double k2, double R);

// sup_r |sqrt(R) N_{kR,m} P^{|m|}(cosh(r/R)) - (-1)^{|m|} sqrt(k) J_{|m|}(kr)|
// over r in [0, r_max].
ContractionCurve contract_ps(double k, int m, double r_max, int r_samples,
                             const std::vector<double>& R_list);

// sup over the (x, y) grid of |R Psi^{EQ(+-)} - sqrt(2k/|k2|) Psi^{(+-)}(x,y)|.
ContractionCurve contract_eq(double k, double k1, interbasis::Parity parity,
                             double y_max, int y_samples,
                             const std::vector<double>& R_list);

// |R Psi^HO_{kR, k2 R}(1 + x/R, y/R) - (sqrt k/pi) sin(M - |k1| x) e^{i k2 y}/sqrt|k1||
ContractionCurve contract_ho(double k, double k2, const std::vector<double>& x_probe,
                             const std::vector<double>& R_list);

// sup_alpha |sqrt(R) U^{m(+-)}_{kR, kR cos a} -+ (-i)^{|m|}{cos,sin}(m a)/sqrt(pi |k2|)|
ContractionCurve contract_u(double k, int m, interbasis::Parity parity,
                            const std::vector<double>& alpha_grid,
                            const std::vector<double>& R_list);

// sqrt(R)-scaled gap between W^{k1 R (+)}_{kR, k2p R} and its stationary-phase
// asymptote.
ContractionCurve contract_w(double k, double k1, double k2p,
                            const std::vector<double>& R_list);

// sqrt(R)-scaled gap between W^{(-)} and (i k2p/|k2p|) W^{(+)}, relative to |W|.
ContractionCurve contract_w_minus_relation(double k, double k1, double k2p,
                                           const std::vector<double>& R_list);

// sqrt(R)-scaled gap between V^m_{kR, k2 R} (nu-integral route) and the
// trigonometric asymptote with phase M.
ContractionCurve contract_v(double k, double k2, int m,
                            const std::vector<double>& R_list);

// Truncated Jacobi-Anger sum against the plane wave; requires
// M_trunc >= k r + 20.
verify::IdentityReport jacobi_anger_check(double k, double r, double phi, double alpha,
                                          int m_trunc);

// (1/pi) int_0^pi cos(x sin a - m a) da = J_m(x).
verify::IdentityReport bessel_integral_check(int m, double x);

} // namespace hyperbasis::contraction
