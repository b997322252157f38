#pragma once

// Quadrature engines for the identity suite: adaptive Gauss-Kronrod panels,
// tanh-sinh for endpoint singularities, decay-aware semi-infinite
// integration and a Longman-style oscillatory rule.

#include <complex>
#include <functional>

#include "hyperbasis/errors.hpp"

namespace hyperbasis::quadrature {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double err_est = 0.0;
    long nodes = 0;
};

struct QuadAccuracy {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_depth = 48;
    long max_nodes = 4000000;
};

// Adaptive G7/K15 on a finite interval.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadAccuracy& acc = {});

// Semi-infinite [a, inf) for integrands with (at least) exponential decay:
// geometrically growing panels, stopped once three consecutive panels are
// negligible.
QuadratureResult integrate_decay(const Integrand& f, double a,
                                 const QuadAccuracy& acc = {});

// Semi-infinite oscillatory integral with decaying envelope: partition at
// the half-period scale pi/freq_hint, panel sums accelerated with the
// epsilon algorithm when convergence is slow.
QuadratureResult integrate_osc(const Integrand& f, double a, double freq_hint,
                               const QuadAccuracy& acc = {});

// tanh-sinh rule on (a, b); tolerates integrable endpoint singularities.
QuadratureResult integrate_tanh_sinh(const Integrand& f, double a, double b,
                                     const QuadAccuracy& acc = {});

} // namespace hyperbasis::quadrature
