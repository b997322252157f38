#pragma once

// Interbasis expansion coefficients between the three subgroup bases:
//   W^{nu(+-)}_{rho s}  horocyclic <-> equidistant   (gamma closed form)
//   U^{m(+-)}_{rho nu}  equidistant <-> pseudo-spherical
//                       (Wilson-polynomial closed form + mu-integral route)
//   V^{m}_{rho s}       horocyclic <-> pseudo-spherical
//                       (Laguerre series, nu-integral, phi-integral routes)
// plus the unimodular phases F^{(+-)}, G^{(+-)}.
//
// Phases of gamma-ratio square roots are always assembled additively from
// log-gamma imaginary parts, never via sqrt of a computed quotient, so no
// branch-cut jumps appear along nu sweeps.

#include <complex>

#include "hyperbasis/quadrature.hpp"
#include "hyperbasis/specfun.hpp"

namespace hyperbasis::interbasis {

using Complex = std::complex<double>;
using specfun::SeriesAccuracy;

enum class Parity { Plus, Minus };

enum class Route {
    closed_form,
    wilson,
    mu_integral,
    laguerre_series,
    nu_integral,
    phi_integral,
};

struct CoefficientValue {
    Complex value{0.0, 0.0};
    Route route = Route::closed_form;
    double err_est = 0.0;
};

// Unimodular phases.
Complex phase_f(Parity parity, double rho, double nu);
Complex phase_g(Parity parity, double rho, double nu);

// W^{nu(+)}_{rho s} = (|s|/2)^{i nu} F^{(+)} / (2 sqrt(pi |s|)),
// W^{nu(-)}_{rho s} = (i s/|s|) (|s|/2)^{i nu} F^{(-)} / (2 sqrt(pi |s|)).
CoefficientValue coeff_w(double rho, double s, double nu, Parity parity);

// U^{m(+-)}_{rho nu}, Wilson-Racah closed form (production route).
CoefficientValue coeff_u(double rho, double nu, int m, Parity parity);

// Same coefficient through the semi-infinite mu-integral representation
// (oracle route).
CoefficientValue coeff_u_integral(double rho, double nu, int m, Parity parity,
                                  const quadrature::QuadAccuracy& acc = {});

// V^m_{rho s} as the double Laguerre series.  rho < 1e-3 is rejected
// (1/sinh(pi rho) pole); the phi-integral route stays available there.
CoefficientValue coeff_v_series(double rho, double s, int m,
                                const SeriesAccuracy& acc = {});

// V^m_{rho s} = int [W+ U+ + W- U-] d nu over a gamma-envelope-truncated
// window.
CoefficientValue coeff_v_nu_integral(double rho, double s, int m,
                                     const quadrature::QuadAccuracy& acc = {});

// V^m_{rho s} from the 2 pi-periodic projection along the tau = tau_probe
// circle; the result is tau_probe-independent.
CoefficientValue coeff_v_phi_integral(double rho, double s, int m, double tau_probe,
                                      const quadrature::QuadAccuracy& acc = {});

} // namespace hyperbasis::interbasis
