#include "hyperbasis/contraction.hpp"

#include <cmath>
#include <numbers>

#include "hyperbasis/bases.hpp"
#include "hyperbasis/parallel.hpp"
#include "hyperbasis/quadrature.hpp"
#include "hyperbasis/specfun.hpp"

namespace hyperbasis::contraction {

namespace {

constexpr double kPi = std::numbers::pi;

Complex ipow(int m) {
    // (-i)^{|m|}
    switch (((m % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

} // namespace

FlatParams FlatParams::from_angle(double k, double alpha) {
    if (!(k > 0.0)) throw DomainError("FlatParams: k must be positive");
    return {k, k * std::cos(alpha), k * std::sin(alpha), alpha};
}

FlatParams FlatParams::from_k1(double k, double k1, int k2_sign) {
    if (!(k > 0.0) || std::fabs(k1) > k) throw DomainError("FlatParams: need |k1| <= k");
    double k2 = k2_sign * std::sqrt(std::max(k * k - k1 * k1, 0.0));
    return {k, k1, k2, std::atan2(k2, k1)};
}

FlatParams FlatParams::from_k2(double k, double k2, int k1_sign) {
    if (!(k > 0.0) || std::fabs(k2) > k) throw DomainError("FlatParams: need |k2| <= k");
    double k1 = k1_sign * std::sqrt(std::max(k * k - k2 * k2, 0.0));
    return {k, k1, k2, std::atan2(k2, k1)};
}

bool ContractionCurve::strictly_decreasing() const {
    for (std::size_t i = 1; i < errors.size(); ++i)
        if (!(errors[i] < errors[i - 1])) return false;
    return true;
}

void ContractionCurve::fit() {
    if (R_values.size() < 4) { degenerate = true; fitted_exponent = 0.0; fitted_prefactor = 0.0; return; }
    degenerate = false;
    for (double e : errors)
        if (!(e > 0.0)) degenerate = true;
    if (degenerate) {
        fitted_exponent = 0.0;
        fitted_prefactor = 0.0;
        return;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = R_values.size();
    for (std::size_t i = 0; i < n; ++i) {
        double x = std::log(R_values[i]), y = std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double denom = n * sxx - sx * sx;
    fitted_exponent = (n * sxy - sx * sy) / denom;
    fitted_prefactor = std::exp((sy - fitted_exponent * sx) / n);
}

double phase_m(double k, double k2, double R) {
    double ak2 = std::fabs(k2);
    if (!(k > ak2 && ak2 > 0.0)) throw DomainError("phase_m: need k > |k2| > 0");
    double k1 = std::sqrt(k * k - k2 * k2);
    return 0.25 * kPi + k * R * std::acosh(k / ak2) - k1 * R;
}

ContractionCurve contract_ps(double k, int m, double r_max, int r_samples,
                             const std::vector<double>& R_list) {
    if (!(r_max > 0.0) || r_samples < 2) throw DomainError("contract_ps: bad r grid");
    ContractionCurve c;
    c.R_values = R_list;
    c.errors.resize(R_list.size());
    parallel::for_each_index(R_list.size(), [&](std::size_t i) {
        double R = R_list[i];
        bases::SpectralParams sp{R, k * R};
        double worst = 0.0;
        for (int j = 0; j <= r_samples; ++j) {
            double r = r_max * j / r_samples;
            double lhs = std::sqrt(R) * bases::psi_s_radial(sp, m, r / R);
            double rhs = ((std::abs(m) % 2 == 0) ? 1.0 : -1.0) * std::sqrt(k) *
                         specfun::bessel_j(std::abs(m), k * r);
            worst = std::max(worst, std::fabs(lhs - rhs));
        }
        c.errors[i] = worst;
    });
    c.fit();
    return c;
}

ContractionCurve contract_eq(double k, double k1, interbasis::Parity parity, double y_max,
                             int y_samples, const std::vector<double>& R_list) {
    if (std::fabs(k1) >= k) throw DomainError("contract_eq: need |k1| < k");
    double k2 = std::sqrt(k * k - k1 * k1);
    if (k2 == 0.0) throw DomainError("contract_eq: k2 must be nonzero");
    ContractionCurve c;
    c.R_values = R_list;
    c.errors.resize(R_list.size());
    bases::Parity bp = (parity == interbasis::Parity::Plus) ? bases::Parity::Plus
                                                            : bases::Parity::Minus;
    parallel::for_each_index(R_list.size(), [&](std::size_t i) {
        double R = R_list[i];
        bases::SpectralParams sp{R, k * R};
        double worst = 0.0;
        for (double x : {0.0, 1.0}) {
            for (int j = 0; j <= y_samples; ++j) {
                double y = -y_max + 2.0 * y_max * j / y_samples;
                geometry::EquidistantPoint p{y / R, x / R};
                Complex lhs = R * bases::psi_eq(sp, k1 * R, bp, p).value;
                double trig = (parity == interbasis::Parity::Plus)
                                  ? std::cos(k2 * y)
                                  : std::sin(k2 * y);
                Complex rhs = std::sqrt(2.0 * k / k2) *
                              std::exp(Complex(0.0, k1 * x)) * trig / (2.0 * kPi);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
        c.errors[i] = worst;
    });
    c.fit();
    return c;
}

ContractionCurve contract_ho(double k, double k2, const std::vector<double>& x_probe,
                             const std::vector<double>& R_list) {
    double ak2 = std::fabs(k2);
    if (!(k > ak2 && ak2 > 0.0)) throw DomainError("contract_ho: need k > |k2| > 0");
    double k1 = std::sqrt(k * k - k2 * k2);
    if (k1 == 0.0) throw DomainError("contract_ho: k1 must be nonzero");
    ContractionCurve c;
    c.R_values = R_list;
    c.errors.resize(R_list.size());
    parallel::for_each_index(R_list.size(), [&](std::size_t i) {
        double R = R_list[i];
        bases::SpectralParams sp{R, k * R};
        double m_phase = phase_m(k, k2, R);
        double worst = 0.0;
        for (double x : x_probe) {
            for (double y : {0.0, 0.6}) {
                geometry::HorocyclicPoint p{1.0 + x / R, y / R};
                Complex lhs = R * bases::psi_ho(sp, k2 * R, p).value;
                Complex rhs = std::sqrt(k) / kPi * std::sin(m_phase - k1 * x) /
                              std::sqrt(k1) * std::exp(Complex(0.0, k2 * y));
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
        c.errors[i] = worst;
    });
    c.fit();
    return c;
}

ContractionCurve contract_u(double k, int m, interbasis::Parity parity,
                            const std::vector<double>& alpha_grid,
                            const std::vector<double>& R_list) {
    for (double a : alpha_grid)
        if (std::fabs(std::sin(a)) < 1e-12)
            throw DomainError("contract_u: alpha must avoid {0, +-pi}");
    ContractionCurve c;
    c.R_values = R_list;
    c.errors.resize(R_list.size());
    parallel::for_each_index(R_list.size(), [&](std::size_t i) {
        double R = R_list[i];
        double worst = 0.0;
        for (double a : alpha_grid) {
            double k2 = k * std::sin(a);
            Complex u = interbasis::coeff_u(k * R, k * R * std::cos(a), m, parity).value;
            Complex lhs = std::sqrt(R) * u;
            Complex rhs = ipow(m) / std::sqrt(kPi * std::fabs(k2));
            rhs *= (parity == interbasis::Parity::Plus) ? std::cos(m * a)
                                                        : -std::sin(m * a);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        c.errors[i] = worst;
    });
    c.fit();
    return c;
}

namespace {

Complex w_asymptote(double k, double k1, double k2p, double R) {
    double k2 = std::sqrt(k * k - k1 * k1);
    double mod = 1.0 / (2.0 * std::sqrt(kPi * std::fabs(k2p) * R));
    double phase = R * k1 + R * k1 * std::log(std::fabs(k2p / k2)) +
                   0.5 * R * k * std::log(std::fabs((k1 - k) / (k1 + k)));
    return mod * std::exp(Complex(0.0, phase));
}

} // namespace

ContractionCurve contract_w(double k, double k1, double k2p,
                            const std::vector<double>& R_list) {
    if (!(std::fabs(k1) < k) || k2p == 0.0)
        throw DomainError("contract_w: need |k1| < k and k2p != 0");
    ContractionCurve c;
    c.R_values = R_list;
    c.errors.resize(R_list.size());
    parallel::for_each_index(R_list.size(), [&](std::size_t i) {
        double R = R_list[i];
        Complex w =
            interbasis::coeff_w(k * R, k2p * R, k1 * R, interbasis::Parity::Plus).value;
        c.errors[i] = std::abs(w - w_asymptote(k, k1, k2p, R)) * std::sqrt(R);
    });
    c.fit();
    return c;
}

ContractionCurve contract_w_minus_relation(double k, double k1, double k2p,
                                           const std::vector<double>& R_list) {
    ContractionCurve c;
    c.R_values = R_list;
    c.errors.resize(R_list.size());
    parallel::for_each_index(R_list.size(), [&](std::size_t i) {
        double R = R_list[i];
        Complex wp =
            interbasis::coeff_w(k * R, k2p * R, k1 * R, interbasis::Parity::Plus).value;
        Complex wm =
            interbasis::coeff_w(k * R, k2p * R, k1 * R, interbasis::Parity::Minus).value;
        Complex want = Complex(0.0, k2p / std::fabs(k2p)) * wp;
        c.errors[i] = std::abs(wm - want) / std::abs(wp);
    });
    c.fit();
    return c;
}

ContractionCurve contract_v(double k, double k2, int m, const std::vector<double>& R_list) {
    double ak2 = std::fabs(k2);
    if (!(ak2 > 0.0 && ak2 < k)) throw DomainError("contract_v: need 0 < |k2| < k");
    double k1 = std::sqrt(k * k - k2 * k2); // cos(alpha) > 0 branch
    double alpha = std::atan2(k2, k1);
    ContractionCurve c;
    c.R_values = R_list;
    c.errors.resize(R_list.size());
    parallel::for_each_index(R_list.size(), [&](std::size_t i) {
        double R = R_list[i];
        Complex v = interbasis::coeff_v_nu_integral(k * R, k2 * R, m).value;
        double mp = phase_m(k, k2, R);
        double amp = std::sqrt(2.0 / (kPi * k1 * R));
        double target;
        if (m % 2 == 0) {
            int l = m / 2;
            target = ((l % 2 == 0) ? 1.0 : -1.0) * amp * std::sin(mp + m * alpha);
        } else {
            int l = (m - 1) / 2;
            double sgn = (m > 0) ? 1.0 : -1.0;
            target = (((l % 2) + 2) % 2 == 0 ? 1.0 : -1.0) * sgn * amp *
                     std::cos(mp + m * alpha);
        }
        c.errors[i] = std::abs(v - Complex(target)) * std::sqrt(R);
    });
    c.fit();
    return c;
}

verify::IdentityReport jacobi_anger_check(double k, double r, double phi, double alpha,
                                          int m_trunc) {
    if (m_trunc < k * r + 20) throw DomainError("jacobi_anger: m_trunc too small");
    Complex rhs = 0.0;
    for (int m = -m_trunc; m <= m_trunc; ++m) {
        int am = std::abs(m);
        double jm = specfun::bessel_j(am, k * r);
        if (m < 0 && (am % 2 == 1)) jm = -jm;
        Complex im = std::exp(Complex(0.0, m * kPi / 2.0));
        rhs += std::exp(Complex(0.0, -m * alpha)) * im * jm *
               std::exp(Complex(0.0, m * phi));
    }
    Complex lhs = std::exp(Complex(0.0, k * r * std::cos(phi - alpha)));
    verify::IdentityReport rep;
    rep.id = "JA.jacobi-anger";
    char buf[96];
    snprintf(buf, sizeof buf, "k=%g r=%g phi=%g alpha=%g", k, r, phi, alpha);
    rep.params = buf;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.finalize(1e-10);
    return rep;
}

verify::IdentityReport bessel_integral_check(int m, double x) {
    auto f = [&](double a) -> Complex {
        return std::cos(x * std::sin(a) - m * a) / kPi;
    };
    quadrature::QuadratureResult q = quadrature::integrate(f, 0.0, kPi, {1e-12, 1e-14});
    verify::IdentityReport rep;
    rep.id = "J.integral-rep";
    char buf[64];
    snprintf(buf, sizeof buf, "m=%d x=%g", m, x);
    rep.params = buf;
    rep.lhs = Complex(specfun::bessel_j(m, x));
    rep.rhs = q.value;
    rep.err_budget = q.err_est;
    rep.finalize(1e-10);
    return rep;
}

} // namespace hyperbasis::contraction
