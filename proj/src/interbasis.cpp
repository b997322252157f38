#include "hyperbasis/interbasis.hpp"

#include <cmath>
#include <numbers>

#include "hyperbasis/bases.hpp"
#include "hyperbasis/geometry.hpp"

namespace hyperbasis::interbasis {

namespace {

constexpr double kPi = std::numbers::pi;

double theta_a(double a, double rho, double nu) {
    return specfun::arg_gamma(Complex(a, 0.5 * (rho - nu)));
}
double theta_b(double a, double rho, double nu) {
    return specfun::arg_gamma(Complex(a, 0.5 * (rho + nu)));
}

Complex cis(double t) { return {std::cos(t), std::sin(t)}; }

} // namespace

Complex phase_f(Parity parity, double rho, double nu) {
    double a = (parity == Parity::Plus) ? 0.25 : 0.75;
    return cis(theta_a(a, rho, nu) - theta_b(a, rho, nu));
}

Complex phase_g(Parity parity, double rho, double nu) {
    double a = (parity == Parity::Plus) ? 0.25 : 0.75;
    return cis(-(theta_a(a, rho, nu) + theta_b(a, rho, nu)));
}

CoefficientValue coeff_w(double rho, double s, double nu, Parity parity) {
    if (s == 0.0) throw DomainError("coeff_w: s = 0 excluded");
    double as = std::fabs(s);
    Complex arg_pow = cis(nu * std::log(0.5 * as));
    Complex base = arg_pow / (2.0 * std::sqrt(kPi * as));
    if (parity == Parity::Plus)
        return {base * phase_f(Parity::Plus, rho, nu), Route::closed_form, 1e-15};
    Complex sgn(0.0, s / as);
    return {sgn * base * phase_f(Parity::Minus, rho, nu), Route::closed_form, 1e-15};
}

// ---------------------------------------------------------------------------
// U coefficients, Wilson route.
// ---------------------------------------------------------------------------

CoefficientValue coeff_u(double rho, double nu, int m, Parity parity) {
    int am = std::abs(m);
    bool even = (am % 2 == 0);
    double l2pi = 0.5 * std::log(kPi);
    if (parity == Parity::Plus) {
        if (even) {
            double lg = specfun::log_abs_gamma(Complex(0.5 - am, rho)) +
                        specfun::log_abs_gamma(Complex(0.25, 0.5 * (nu - rho))) +
                        specfun::log_abs_gamma(Complex(0.25, 0.5 * (nu + rho))) -
                        std::lgamma(0.5 + 0.5 * am) -
                        2.0 * specfun::log_abs_gamma(Complex(0.5, rho));
            Complex w = specfun::wilson_poly(am / 2, 0.25 * nu * nu, Complex(0.25, 0.5 * rho),
                                             Complex(0.25, -0.5 * rho), Complex(0.5, 0.0),
                                             Complex(0.0, 0.0));
            double pre = std::exp(am * std::numbers::ln2 - std::numbers::ln2 - l2pi + lg);
            return {pre * w.real(), Route::wilson, 1e-13 * std::fabs(pre * w.real())};
        }
        // odd m
        if (nu == 0.0) return {Complex(0.0), Route::wilson, 0.0};
        double lg = specfun::log_abs_gamma(Complex(0.5 - am, rho)) +
                    specfun::log_abs_gamma(Complex(0.25, 0.5 * (nu - rho))) +
                    specfun::log_abs_gamma(Complex(0.25, 0.5 * (nu + rho))) -
                    std::lgamma(0.5 * am) -
                    2.0 * specfun::log_abs_gamma(Complex(0.5, rho));
        Complex w = specfun::wilson_poly((am - 1) / 2, 0.25 * nu * nu,
                                         Complex(0.25, 0.5 * rho), Complex(0.25, -0.5 * rho),
                                         Complex(0.5, 0.0), Complex(1.0, 0.0));
        double pre = nu * std::exp(am * std::numbers::ln2 - 2.0 * std::numbers::ln2 - l2pi + lg);
        return {Complex(0.0, -pre * w.real()), Route::wilson,
                1e-13 * std::fabs(pre * w.real())};
    }
    // parity minus
    if (m == 0) return {Complex(0.0), Route::wilson, 0.0};
    if (even) {
        if (nu == 0.0) return {Complex(0.0), Route::wilson, 0.0};
        double lg = specfun::log_abs_gamma(Complex(0.5 - am, rho)) +
                    specfun::log_abs_gamma(Complex(0.75, 0.5 * (nu - rho))) +
                    specfun::log_abs_gamma(Complex(0.75, 0.5 * (nu + rho))) -
                    std::lgamma(0.5 + 0.5 * am) -
                    2.0 * specfun::log_abs_gamma(Complex(0.5, rho));
        Complex w = specfun::wilson_poly(am / 2 - 1, 0.25 * nu * nu,
                                         Complex(0.75, 0.5 * rho), Complex(0.75, -0.5 * rho),
                                         Complex(0.5, 0.0), Complex(1.0, 0.0));
        double pre = m * nu *
                     std::exp(am * std::numbers::ln2 - 3.0 * std::numbers::ln2 - l2pi + lg);
        return {pre * w.real(), Route::wilson, 1e-13 * std::fabs(pre * w.real())};
    }
    double lg = specfun::log_abs_gamma(Complex(0.5 - am, rho)) +
                specfun::log_abs_gamma(Complex(0.75, 0.5 * (nu - rho))) +
                specfun::log_abs_gamma(Complex(0.75, 0.5 * (nu + rho))) -
                std::lgamma(1.0 + 0.5 * am) -
                2.0 * specfun::log_abs_gamma(Complex(0.5, rho));
    Complex w = specfun::wilson_poly((am - 1) / 2, 0.25 * nu * nu, Complex(0.75, 0.5 * rho),
                                     Complex(0.75, -0.5 * rho), Complex(0.5, 0.0),
                                     Complex(0.0, 0.0));
    double pre = m * std::exp(am * std::numbers::ln2 - 2.0 * std::numbers::ln2 - l2pi + lg);
    return {Complex(0.0, pre * w.real()), Route::wilson, 1e-13 * std::fabs(pre * w.real())};
}

// ---------------------------------------------------------------------------
// U coefficients, mu-integral route.
// ---------------------------------------------------------------------------

CoefficientValue coeff_u_integral(double rho, double nu, int m, Parity parity,
                                  const quadrature::QuadAccuracy& acc) {
    int am = std::abs(m);
    if (parity == Parity::Minus && m == 0) return {Complex(0.0), Route::mu_integral, 0.0};
    bool even = (am % 2 == 0);
    bool use_cos_m = (parity == Parity::Plus); // cos(|m| arccos tanh mu) vs sin
    bool use_cos_nu = (parity == Parity::Plus) == even;
    auto f = [&](double mu) -> Complex {
        double c = std::tanh(mu);
        double ang = am * std::acos(c);
        double trig_m = use_cos_m ? std::cos(ang) : std::sin(ang);
        double trig_nu = use_cos_nu ? std::cos(nu * mu) : std::sin(nu * mu);
        double lch = std::log(std::cosh(mu));
        Complex osc = std::exp(Complex(-0.5 * lch, -rho * lch));
        return trig_m * trig_nu * osc;
    };
    quadrature::QuadratureResult q = quadrature::integrate_decay(f, 0.0, acc);
    double phi_gamma = specfun::arg_gamma(Complex(0.5 - am, rho));
    Complex g = phase_g(parity, rho, nu);
    Complex pre = g * cis(phi_gamma) * cis(-rho * std::numbers::ln2) * std::sqrt(2.0) / kPi;
    Complex factor;
    if (parity == Parity::Plus) {
        factor = even ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
    } else {
        double sgn = (m > 0) ? 1.0 : -1.0;
        factor = even ? Complex(sgn, 0.0) : Complex(0.0, -sgn);
    }
    Complex v = factor * pre * q.value;
    return {v, Route::mu_integral, q.err_est * std::abs(pre) + 1e-14 * std::abs(v)};
}

// ---------------------------------------------------------------------------
// V coefficients.
// ---------------------------------------------------------------------------

CoefficientValue coeff_v_series(double rho, double s, int m, const SeriesAccuracy& acc) {
    if (s == 0.0) throw DomainError("coeff_v_series: s = 0 excluded");
    if (rho < 1e-3)
        throw DomainError("coeff_v_series: rho below 1e-3 (1/sinh pole); use the phi route");
    int am = std::abs(m);
    double as = std::fabs(s);
    double laguerre_arg = (m >= 0) ? -s : s;
    // Sigma = sum_l (|s|/2)^{2l + i rho} / (Gamma(1+i rho + l) l!) L^{-1/2+2l+i rho}_{|m|}.
    // The -1/2 in the Laguerre index is forced by the route cross-check (and by
    // rederiving the expansion from the Laguerre generating function).
    Complex inv_gamma = std::exp(-specfun::log_gamma(Complex(1.0, rho)));
    Complex pow_irho = cis(rho * std::log(0.5 * as));
    double t = 0.25 * s * s;
    Complex sum = 0.0;
    double tpow = 1.0; // (|s|/2)^{2l} / l!
    double max_abs = 0.0;
    int quiet = 0;
    for (int l = 0; l < 400; ++l) {
        Complex lag = specfun::laguerre_complex(am, Complex(-0.5 + 2.0 * l, rho), laguerre_arg);
        Complex term = tpow * inv_gamma * lag;
        sum += term;
        max_abs = std::max(max_abs, std::abs(term));
        if (std::abs(term) < 0.01 * acc.rel_tol * std::abs(sum)) {
            if (++quiet >= 3) break;
        } else {
            quiet = 0;
        }
        inv_gamma /= Complex(1.0 + l, rho);
        tpow *= t / (l + 1.0);
    }
    sum *= pow_irho;
    double lc = std::lgamma(am + 1.0) + specfun::log_abs_gamma(Complex(0.5 - am, rho)) -
                2.0 * specfun::log_abs_gamma(Complex(0.5, rho));
    double c = std::exp(lc) * std::sqrt(0.5 * kPi) / std::sinh(kPi * rho);
    double sign = (am % 2 == 0) ? 1.0 : -1.0;
    double v = -2.0 * sign * c * sum.imag();
    double err = 2.0 * c * (max_abs * 1e-15 + std::abs(sum) * 1e-16);
    return {Complex(v, 0.0), Route::laguerre_series, err};
}

CoefficientValue coeff_v_nu_integral(double rho, double s, int m,
                                     const quadrature::QuadAccuracy& acc) {
    if (s == 0.0) throw DomainError("coeff_v_nu_integral: s = 0 excluded");
    double tol = std::max(acc.rel_tol, 1e-12);
    double window = rho + 40.0 / kPi * std::log(1.0 / tol);
    auto f = [&](double nu) -> Complex {
        Complex wp = coeff_w(rho, s, nu, Parity::Plus).value;
        Complex up = coeff_u(rho, nu, m, Parity::Plus).value;
        Complex wm = coeff_w(rho, s, nu, Parity::Minus).value;
        Complex um = coeff_u(rho, nu, m, Parity::Minus).value;
        return wp * up + wm * um;
    };
    quadrature::QuadratureResult q = quadrature::integrate(f, -window, window, acc);
    return {q.value, Route::nu_integral, q.err_est};
}

CoefficientValue coeff_v_phi_integral(double rho, double s, int m, double tau_probe,
                                      const quadrature::QuadAccuracy& acc) {
    if (s == 0.0) throw DomainError("coeff_v_phi_integral: s = 0 excluded");
    if (!(tau_probe > 0.0)) throw DomainError("coeff_v_phi_integral: tau_probe must be > 0");
    int am = std::abs(m);
    double p_ref = specfun::conical_legendre(am, rho, tau_probe);
    if (std::fabs(p_ref) < 1e-8)
        throw ProbeDegenerateError("coeff_v_phi_integral: conical value vanishes at probe");
    double as = std::fabs(s);
    // prefactor (scaled): e^{-pi rho/2} / |Gamma(1/2 - |m| + i rho)|
    double g = -kPi * rho / 2.0 - specfun::log_abs_gamma(Complex(0.5 - am, rho));
    double pre = std::exp(g) / (std::sqrt(2.0 * kPi * kPi * kPi) * p_ref);
    // 2 pi-periodic trapezoid; doubles N until stable
    auto eval = [&](int n) -> Complex {
        Complex acc_sum = 0.0;
        for (int k = 0; k < n; ++k) {
            double phi = 2.0 * kPi * k / n;
            geometry::HorocyclicPoint hp =
                geometry::ho_from_ps({tau_probe, phi});
            double kv = specfun::macdonald_imag_scaled(rho, as * hp.y_t);
            Complex val = std::sqrt(hp.y_t) * kv *
                          std::exp(Complex(0.0, s * hp.x_t - m * phi));
            acc_sum += val;
        }
        return acc_sum * (2.0 * kPi / n);
    };
    int n = 256;
    Complex prev = eval(n);
    for (int it = 0; it < 5; ++it) {
        n *= 2;
        Complex cur = eval(n);
        double diff = std::abs(cur - prev);
        if (diff < std::max(acc.abs_tol / std::fabs(pre), acc.rel_tol * std::abs(cur))) {
            return {pre * cur, Route::phi_integral, std::fabs(pre) * diff + 1e-15 * std::abs(pre * cur)};
        }
        prev = cur;
    }
    return {pre * prev, Route::phi_integral, std::fabs(pre) * 1e-9};
}

} // namespace hyperbasis::interbasis
