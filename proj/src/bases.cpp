#include "hyperbasis/bases.hpp"

#include <cmath>
#include <numbers>

namespace hyperbasis::bases {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2Pi = 2.5066282746310005024;

void require(bool ok, const char* msg) {
    if (!ok) throw DomainError(msg);
}

} // namespace

double sinh_scaled(double rho) {
    double e = (rho > 350.0) ? 0.0 : std::exp(-2.0 * kPi * rho);
    return 0.5 * (1.0 - e);
}

double energy(double R, double rho) {
    require(R > 0.0, "energy: R must be positive");
    return (rho * rho + 0.25) / (2.0 * R * R);
}

// --- horocyclic --------------------------------------------------------------

double psi_ho_radial(const SpectralParams& sp, double s, double y) {
    require(sp.R > 0.0 && sp.rho >= 0.0, "psi_ho: invalid spectral parameters");
    require(s != 0.0, "psi_ho: s = 0 excluded");
    require(y > 0.0, "psi_ho: y must be positive");
    double as = std::fabs(s);
    // N e^{pi rho/2} absorbed into the scaled Macdonald value:
    //   N K = (1/(R pi)) sqrt(2 rho sinh_sc/|s|) sqrt(|s| y) K_scaled
    double amp = std::sqrt(2.0 * sp.rho * sinh_scaled(sp.rho) / as) / (sp.R * kPi);
    return amp * std::sqrt(as * y) * specfun::macdonald_imag_scaled(sp.rho, as * y);
}

WaveValue psi_ho(const SpectralParams& sp, double s, const geometry::HorocyclicPoint& p) {
    double radial = psi_ho_radial(sp, s, p.y_t);
    Complex phase = std::exp(Complex(0.0, s * p.x_t));
    return {radial * phase / kSqrt2Pi, Basis::Horocyclic, 0};
}

// --- pseudo-spherical --------------------------------------------------------

double psi_s_radial(const SpectralParams& sp, int m, double tau) {
    require(sp.R > 0.0 && sp.rho >= 0.0, "psi_s: invalid spectral parameters");
    int am = std::abs(m);
    // N = sqrt(rho sinh(pi rho)/pi)/R * |Gamma(1/2 - |m| + i rho)|
    //   = sqrt(rho sinh_sc/pi)/R * exp(pi rho/2 + ln|Gamma|)
    double g = kPi * sp.rho / 2.0 +
               specfun::log_abs_gamma(Complex(0.5 - am, sp.rho));
    double n = std::sqrt(sp.rho * sinh_scaled(sp.rho) / kPi) / sp.R * std::exp(g);
    return n * specfun::conical_legendre(am, sp.rho, tau);
}

WaveValue psi_s(const SpectralParams& sp, int m, const geometry::PseudoSphericalPoint& p) {
    double radial = psi_s_radial(sp, m, p.tau);
    Complex phase = std::exp(Complex(0.0, m * p.phi));
    return {radial * phase / kSqrt2Pi, Basis::PseudoSpherical, 0};
}

// --- equidistant (+/-) -------------------------------------------------------

Complex eq_radial(double rho, double nu, Parity parity, double tau1) {
    double th2 = std::tanh(tau1) * std::tanh(tau1);
    return eq_radial_form(rho, nu, parity, tau1, th2 > 0.5 ? 2 : 1);
}

Complex eq_radial_form(double rho, double nu, Parity parity, double tau1, int form) {
    double th2 = std::tanh(tau1) * std::tanh(tau1);
    bool second_form = (form == 2); // |tau1| > ~0.88 in production
    if (parity == Parity::Plus) {
        if (!second_form) {
            Complex f = specfun::gauss_2f1({0.25, 0.5 * (rho - nu)},
                                           {0.25, 0.5 * (rho + nu)}, {0.5, 0.0}, th2);
            return std::exp(Complex(-0.5, -rho) * std::log(std::cosh(tau1))) * f;
        }
        double sh = std::sinh(tau1);
        Complex f = specfun::gauss_2f1({0.25, -0.5 * (rho - nu)},
                                       {0.25, 0.5 * (rho + nu)}, {0.5, 0.0}, -sh * sh);
        return std::exp(Complex(0.0, nu) * std::log(std::cosh(tau1))) * f;
    }
    if (!second_form) {
        Complex f = specfun::gauss_2f1({0.75, 0.5 * (rho - nu)},
                                       {0.75, 0.5 * (rho + nu)}, {1.5, 0.0}, th2);
        return std::tanh(tau1) *
               std::exp(Complex(-0.5, -rho) * std::log(std::cosh(tau1))) * f;
    }
    double sh = std::sinh(tau1);
    Complex f = specfun::gauss_2f1({0.75, -0.5 * (rho - nu)},
                                   {0.75, 0.5 * (rho + nu)}, {1.5, 0.0}, -sh * sh);
    return sh * std::exp(Complex(0.0, nu) * std::log(std::cosh(tau1))) * f;
}

double eq_norm(const SpectralParams& sp, double nu, Parity parity) {
    require(sp.R > 0.0 && sp.rho >= 0.0, "psi_eq: invalid spectral parameters");
    double rho = sp.rho;
    double a = (parity == Parity::Plus) ? 0.25 : 0.75;
    // ln N = ln|G(a + i(rho+nu)/2)| + ln|G(a + i(rho-nu)/2)|
    //        + (1/2)(ln rho + ln sinh_sc) + pi rho/2 - ln(c sqrt(pi^3) R)
    double lg = specfun::log_abs_gamma(Complex(a, 0.5 * (rho + nu))) +
                specfun::log_abs_gamma(Complex(a, 0.5 * (rho - nu)));
    double c = (parity == Parity::Plus) ? 2.0 : 1.0;
    double ln_n = lg + 0.5 * (std::log(rho) + std::log(sinh_scaled(rho))) +
                  kPi * rho / 2.0 -
                  std::log(c * std::sqrt(kPi * kPi * kPi) * sp.R);
    return std::exp(ln_n);
}

WaveValue psi_eq(const SpectralParams& sp, double nu, Parity parity,
                 const geometry::EquidistantPoint& p) {
    double n = eq_norm(sp, nu, parity);
    Complex radial = eq_radial(sp.rho, nu, parity, p.tau1);
    Complex phase = std::exp(Complex(0.0, nu * p.tau2));
    return {n * radial * phase / kSqrt2Pi, Basis::Equidistant,
            parity == Parity::Plus ? +1 : -1};
}

// --- equidistant (1,2) -------------------------------------------------------

Complex eq12_c_plus(double rho, double nu) {
    Complex lg = specfun::log_gamma(Complex(0.75, 0.5 * (rho + nu))) +
                 specfun::log_gamma(Complex(0.75, 0.5 * (rho - nu)));
    if (lg.real() < -280.0) throw AccuracyError("eq12: C+ underflows");
    return std::exp(Complex(0.0, -rho * std::numbers::ln2) - lg) * std::sqrt(kPi);
}

Complex eq12_c_minus(double rho, double nu) {
    Complex lg = specfun::log_gamma(Complex(0.25, 0.5 * (rho + nu))) +
                 specfun::log_gamma(Complex(0.25, 0.5 * (rho - nu)));
    if (lg.real() < -280.0) throw AccuracyError("eq12: C- underflows");
    return 2.0 * std::exp(Complex(0.0, -rho * std::numbers::ln2) - lg) * std::sqrt(kPi);
}

Complex eq12_radial(double rho, double nu, int which, double tau1) {
    require(which == 1 || which == 2, "psi_eq12: which must be 1 or 2");
    Complex cp = eq12_c_plus(rho, nu) * eq_radial(rho, nu, Parity::Plus, tau1);
    Complex cm = eq12_c_minus(rho, nu) * eq_radial(rho, nu, Parity::Minus, tau1);
    return (which == 1) ? cp + cm : cp - cm;
}

Complex eq12_radial_ferrers(double rho, double nu, int which, double tau1) {
    require(which == 1 || which == 2, "psi_eq12: which must be 1 or 2");
    double arg = (which == 1) ? -std::tanh(tau1) : std::tanh(tau1);
    return specfun::ferrers_conical(rho, nu, arg) / std::sqrt(std::cosh(tau1));
}

WaveValue psi_eq12(const SpectralParams& sp, double nu, int which,
                   const geometry::EquidistantPoint& p) {
    require(sp.R > 0.0 && sp.rho >= 0.0, "psi_eq12: invalid spectral parameters");
    double rho = sp.rho;
    // |N|^2 = rho sinh(pi rho) / (sinh^2 pi rho + cosh^2 pi nu); scaled by
    // e^{-2 pi max(rho,|nu|)} to stay in range.
    double mx = std::max(rho, std::fabs(nu));
    double num = rho * sinh_scaled(rho) * std::exp(-kPi * (2.0 * mx - rho));
    double sh_part = sinh_scaled(rho) * std::exp(kPi * (rho - mx));
    double ch_part = 0.5 * (1.0 + std::exp(-2.0 * kPi * std::fabs(nu))) *
                     std::exp(kPi * (std::fabs(nu) - mx));
    double n2 = num / (sh_part * sh_part + ch_part * ch_part);
    double n = std::sqrt(n2) / (sp.R * std::sqrt(2.0));
    Complex radial = eq12_radial(rho, nu, which, p.tau1);
    Complex phase = std::exp(Complex(0.0, nu * p.tau2));
    return {n * radial * phase / kSqrt2Pi, Basis::Equidistant12, which};
}

// --- potentials --------------------------------------------------------------

double potential_s(int m, double tau) {
    double sh = std::sinh(tau);
    return (m * m - 0.25) / (2.0 * sh * sh);
}

double potential_eq(double nu, double tau1) {
    double ch = std::cosh(tau1);
    return (nu * nu + 0.25) / (2.0 * ch * ch);
}

} // namespace hyperbasis::bases
