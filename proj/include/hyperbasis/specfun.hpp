#pragma once

// Self-contained special-function kernel: complex log-gamma, Bessel J,
// Macdonald function of imaginary order, conical Legendre functions,
// Gauss 2F1 with complex parameters, terminating 4F3(1), Wilson polynomials
// and Laguerre polynomials with complex upper parameter.
//
// All functions are pure and thread-safe.  Values that would over/underflow
// in natural scale have *_scaled companions carrying the exp(pi*rho/2)
// factor that the basis normalizations cancel against.

#include <complex>

#include "hyperbasis/errors.hpp"

namespace hyperbasis::specfun {

using Complex = std::complex<double>;

struct SeriesAccuracy {
    double rel_tol = 1e-12;
    int max_terms = 100000;
};

// Principal-branch log Gamma, Lanczos approximation with reflection for
// Re z < 0.5.  exp(log_gamma(z)) matches Gamma(z) to ~1e-14 relative on
// Re z in [-50, 50].  Throws PoleError at non-positive integers.
Complex log_gamma(Complex z);

// |Gamma(z)| and arg Gamma(z) pulled out of log_gamma.
double log_abs_gamma(Complex z);
double arg_gamma(Complex z);

// arg Gamma(1 + i*rho) to double-double accuracy (used where an overall
// phase error would be amplified by cancellation).  Returned as hi/lo pair.
void arg_gamma_one_plus_irho(double rho, double& hi, double& lo);

// K_{i rho}(x) for rho >= 0, x > 0.  Real-valued; K_{i rho} = K_{-i rho}.
double macdonald_imag(double rho, double x, const SeriesAccuracy& acc = {});

// exp(pi*rho/2) * K_{i rho}(x): stays representable through the oscillatory
// region for large rho where the bare value underflows.
double macdonald_imag_scaled(double rho, double x, const SeriesAccuracy& acc = {});

// Cross-check oracle: direct quadrature of int_0^inf exp(-x cosh t) cos(rho t) dt.
// Accurate when x is not far inside the oscillatory region (x >~ rho).
double macdonald_imag_cos_transform(double rho, double x);

// Bessel J_m(x), integer m >= 0, any real x.
double bessel_j(int m, double x);

// Conical (Mehler) function P^m_{-1/2 + i rho}(cosh tau), m >= 0 integer,
// rho >= 0, tau >= 0.  Real-valued.
double conical_legendre(int m, double rho, double tau, const SeriesAccuracy& acc = {});

// Ferrers function P^{-i rho}_{-1/2 + i nu}(x) on the cut, |x| < 1.
// Second evaluation route for the equidistant (1,2) family.
Complex ferrers_conical(double rho, double nu, double x, const SeriesAccuracy& acc = {});

// Gauss 2F1(a, b; c; z) for real z0 <= z < 1 (any negative z0), principal
// branch.  Series / Pfaff / 1-z0-connection switching by region.
Complex gauss_2f1(Complex a, Complex b, Complex c, double z, const SeriesAccuracy& acc = {});

// Terminating, well-posed 4F3(top; bottom; 1).  Exactly one top parameter
// must be within 1e-9 of a non-positive integer -n (it is snapped to it);
// bottom parameters must avoid non-positive integers >= -n.
Complex hyp4f3_terminating(const Complex top[4], const Complex bottom[3]);

// Wilson polynomial W_n(x2; a, b, c, d) (x2 = x^2 in the usual notation).
Complex wilson_poly(int n, double x2, Complex a, Complex b, Complex c, Complex d);

// Generalized Laguerre L_n^{alpha}(x) with complex alpha, exact finite sum.
Complex laguerre_complex(int n, Complex alpha, double x);

} // namespace hyperbasis::specfun
