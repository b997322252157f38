#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hyperbasis/bases.hpp"

using namespace hyperbasis;
using bases::Complex;
using bases::SpectralParams;

namespace {

constexpr double kPi = M_PI;

double rel(Complex a, Complex b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// 5-point second derivative
template <class F>
Complex d2(const F& f, double x, double h) {
    return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) -
            f(x - 2 * h)) /
           (12.0 * h * h);
}
template <class F>
Complex d1(const F& f, double x, double h) {
    return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}

} // namespace

TEST_CASE("energy formula") {
    CHECK(bases::energy(1.0, 0.0) == doctest::Approx(0.125));
    CHECK(bases::energy(1.0, 1.0) == doctest::Approx(0.625));
    // R -> inf with rho = k R: E -> k^2/2
    double k = 0.7;
    CHECK(bases::energy(1e8, k * 1e8) == doctest::Approx(k * k / 2.0).epsilon(1e-10));
    CHECK_THROWS_AS(bases::energy(0.0, 1.0), DomainError);
}

TEST_CASE("psi_ho basics") {
    SpectralParams sp{1.0, 1.0};
    // modulus independent of x
    double m0 = std::abs(bases::psi_ho(sp, 1.0, {1.3, 0.0}).value);
    double m1 = std::abs(bases::psi_ho(sp, 1.0, {1.3, 2.7}).value);
    CHECK(m0 == doctest::Approx(m1).epsilon(1e-14));
    // radial factor vanishes in both limits (rho = s = 4 regime)
    SpectralParams sp4{1.0, 4.0};
    double mid = std::fabs(bases::psi_ho_radial(sp4, 4.0, 1.0));
    CHECK(std::fabs(bases::psi_ho_radial(sp4, 4.0, 1e-6)) < mid);
    CHECK(std::fabs(bases::psi_ho_radial(sp4, 4.0, 12.0)) < 1e-6 * mid);
    // frozen value at (rho=1, s=1, y=1, x=0, R=1):
    //   N sqrt(y) K_{i}(1) / sqrt(2 pi), N = (1/pi) sqrt(2 sinh pi)
    double n = std::sqrt(2.0 * std::sinh(kPi)) / kPi;
    double want = n * 0.2894280370259921 / std::sqrt(2.0 * kPi);
    CHECK(bases::psi_ho(sp, 1.0, {1.0, 0.0}).value.real() ==
          doctest::Approx(want).epsilon(1e-12));
    CHECK_THROWS_AS(bases::psi_ho(sp, 0.0, {1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(bases::psi_ho(sp, 1.0, {-0.2, 0.0}), DomainError);
}

TEST_CASE("psi_s basics") {
    SpectralParams sp{1.0, 1.0};
    CHECK(bases::psi_s(sp, 2, {0.0, 0.3}).value == Complex(0.0, 0.0));
    // m = 0 at tau = 0: N/sqrt(2 pi), P = 1
    double n0 = std::sqrt(std::sinh(kPi) / kPi) *
                std::exp(specfun::log_abs_gamma(Complex(0.5, 1.0)));
    CHECK(bases::psi_s(sp, 0, {0.0, 0.0}).value.real() ==
          doctest::Approx(n0 / std::sqrt(2.0 * kPi)).epsilon(1e-12));
    // Fig. 3 green curve shape for m=2: positive rise, first extremum location
    double prev = 0.0;
    double argmax = 0.0, maxv = 0.0;
    for (int i = 1; i <= 300; ++i) {
        double tau = 3.0 * i / 300.0;
        double v = bases::psi_s_radial(sp, 2, tau);
        if (i < 60) CHECK(v >= prev - 1e-12); // rising from zero
        if (v > maxv) {
            maxv = v;
            argmax = tau;
        }
        prev = v;
    }
    CHECK(maxv > 0.0);
    CHECK(argmax > 0.8);
    CHECK(argmax < 2.2);
}

TEST_CASE("psi_eq parity and values") {
    SpectralParams sp{1.0, 1.0};
    double nu = 2.0;
    // odd family vanishes at tau1 = 0
    CHECK(bases::psi_eq(sp, nu, bases::Parity::Minus, {0.0, 0.7}).value ==
          Complex(0.0, 0.0));
    // even family at tau1 = 0: N e^{i nu tau2}/sqrt(2 pi)
    Complex v = bases::psi_eq(sp, nu, bases::Parity::Plus, {0.0, 0.7}).value;
    double n = bases::eq_norm(sp, nu, bases::Parity::Plus);
    Complex want = n * std::exp(Complex(0.0, nu * 0.7)) / std::sqrt(2.0 * kPi);
    CHECK(rel(v, want) < 1e-13);
    // parity: psi(+-)(-tau1) = +- psi(+-)(tau1)
    for (double t1 : {0.3, 0.8, 1.4}) {
        Complex pp = bases::eq_radial(1.0, nu, bases::Parity::Plus, t1);
        Complex pm = bases::eq_radial(1.0, nu, bases::Parity::Plus, -t1);
        CHECK(rel(pp, pm) < 1e-12);
        Complex mp = bases::eq_radial(1.0, nu, bases::Parity::Minus, t1);
        Complex mm = bases::eq_radial(1.0, nu, bases::Parity::Minus, -t1);
        CHECK(rel(mp, -mm) < 1e-12);
    }
    // the two hypergeometric forms agree pointwise
    for (double t1 : {0.3, 0.6, 0.87, 0.89, 1.2}) {
        for (auto par : {bases::Parity::Plus, bases::Parity::Minus}) {
            Complex f1 = bases::eq_radial_form(1.0, nu, par, t1, 1);
            Complex f2 = bases::eq_radial_form(1.0, nu, par, t1, 2);
            CHECK(rel(f1, f2) < 1e-11);
        }
    }
}

TEST_CASE("psi_eq12 endpoint identities") {
    double rho = 1.0, nu = 2.0;
    Complex c_plus = bases::eq12_c_plus(rho, nu);
    Complex f1_0 = bases::eq12_radial(rho, nu, 1, 0.0);
    Complex f2_0 = bases::eq12_radial(rho, nu, 2, 0.0);
    CHECK(rel(f1_0, c_plus) < 1e-12);
    CHECK(rel(f2_0, c_plus) < 1e-12);
    // psi^(1)(tau) = psi^(2)(-tau) on a grid
    for (double t1 : {-1.5, -0.4, 0.9, 2.0}) {
        Complex a = bases::eq12_radial(rho, nu, 1, t1);
        Complex b = bases::eq12_radial(rho, nu, 2, -t1);
        CHECK(rel(a, b) < 1e-12);
    }
}

TEST_CASE("psi_eq12 two evaluation routes agree") {
    for (double rho : {0.7, 1.0, 2.0})
        for (double nu : {0.0, 1.0, 2.0})
            for (double t1 : {-1.8, -0.5, 0.0, 0.4, 1.2, 2.0})
                for (int which : {1, 2}) {
                    Complex a = bases::eq12_radial(rho, nu, which, t1);
                    Complex b = bases::eq12_radial_ferrers(rho, nu, which, t1);
                    CHECK(rel(a, b) < 1e-10);
                }
}

TEST_CASE("Fig. 5 regime: sign structure of the (1,2) family") {
    // rho = 1, nu = 2: frozen crossing counts of Re/Im on tau1 in [-4, 4]
    // (values confirmed against an independent Ferrers-function evaluation)
    double rho = 1.0, nu = 2.0;
    int re_cross = 0, im_cross = 0;
    Complex prev = bases::eq12_radial(rho, nu, 1, -4.0);
    for (int i = 1; i <= 400; ++i) {
        double t = -4.0 + 8.0 * i / 400.0;
        Complex cur = bases::eq12_radial(rho, nu, 1, t);
        if (cur.real() * prev.real() < 0.0) ++re_cross;
        if (cur.imag() * prev.imag() < 0.0) ++im_cross;
        prev = cur;
    }
    CHECK(re_cross == 1);
    CHECK(im_cross == 1);
    // independently frozen sample (tau1 = -2)
    Complex v = bases::eq12_radial(rho, nu, 1, -2.0);
    CHECK(v.real() == doctest::Approx(-0.16937747).epsilon(1e-6));
    CHECK(v.imag() == doctest::Approx(-1.01338012).epsilon(1e-6));
}

TEST_CASE("PDE residuals in each chart (criterion 7 unit-level)") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double h = 1e-4;

    SUBCASE("horocyclic") {
        SpectralParams sp{1.0, 1.3};
        double s = 1.2;
        double scale = 0.0;
        std::vector<std::array<double, 2>> pts;
        for (int i = 0; i < 20; ++i) {
            pts.push_back({0.4 + 2.0 * u(rng), -1.0 + 2.0 * u(rng)});
            scale = std::max(scale,
                             std::abs(bases::psi_ho(sp, s, {pts.back()[0], pts.back()[1]})
                                          .value));
        }
        for (auto& p : pts) {
            auto fy = [&](double y) { return bases::psi_ho(sp, s, {y, p[1]}).value; };
            auto fx = [&](double x) { return bases::psi_ho(sp, s, {p[0], x}).value; };
            Complex lap = p[0] * p[0] * (d2(fy, p[0], h) + d2(fx, p[1], h));
            Complex res = lap + (sp.rho * sp.rho + 0.25) *
                                    bases::psi_ho(sp, s, {p[0], p[1]}).value;
            CHECK(std::abs(res) < 1e-5 * scale * (sp.rho * sp.rho + 1.0));
        }
    }

    SUBCASE("pseudo-spherical") {
        SpectralParams sp{1.0, 1.0};
        int m = 2;
        double scale = 0.0;
        std::vector<std::array<double, 2>> pts;
        for (int i = 0; i < 20; ++i) {
            pts.push_back({0.5 + 1.5 * u(rng), 2.0 * kPi * u(rng)});
            scale = std::max(scale,
                             std::abs(bases::psi_s(sp, m, {pts.back()[0], pts.back()[1]})
                                          .value));
        }
        for (auto& p : pts) {
            auto ft = [&](double t) { return bases::psi_s(sp, m, {t, p[1]}).value; };
            auto fp = [&](double ph) { return bases::psi_s(sp, m, {p[0], ph}).value; };
            double sh = std::sinh(p[0]);
            Complex lap = d2(ft, p[0], h) + d1(ft, p[0], h) / std::tanh(p[0]) +
                          d2(fp, p[1], h) / (sh * sh);
            Complex res =
                lap + (sp.rho * sp.rho + 0.25) * bases::psi_s(sp, m, {p[0], p[1]}).value;
            CHECK(std::abs(res) < 1e-5 * scale * (sp.rho * sp.rho + 1.0));
        }
    }

    SUBCASE("equidistant both parities") {
        SpectralParams sp{1.0, 1.0};
        double nu = 1.5;
        for (auto par : {bases::Parity::Plus, bases::Parity::Minus}) {
            double scale = 0.0;
            std::vector<std::array<double, 2>> pts;
            for (int i = 0; i < 20; ++i) {
                pts.push_back({-1.5 + 3.0 * u(rng), -1.0 + 2.0 * u(rng)});
                scale = std::max(
                    scale, std::abs(bases::psi_eq(sp, nu, par,
                                                  {pts.back()[0], pts.back()[1]})
                                        .value));
            }
            for (auto& p : pts) {
                auto f1 = [&](double t) {
                    return bases::psi_eq(sp, nu, par, {t, p[1]}).value;
                };
                auto f2 = [&](double t) {
                    return bases::psi_eq(sp, nu, par, {p[0], t}).value;
                };
                double ch = std::cosh(p[0]);
                Complex lap = d2(f1, p[0], h) + std::tanh(p[0]) * d1(f1, p[0], h) +
                              d2(f2, p[1], h) / (ch * ch);
                Complex res = lap + (sp.rho * sp.rho + 0.25) *
                                        bases::psi_eq(sp, nu, par, {p[0], p[1]}).value;
                CHECK(std::abs(res) < 1e-5 * scale * (sp.rho * sp.rho + 1.0));
            }
        }
    }
}

TEST_CASE("separation-operator eigenvalues by finite differences") {
    SpectralParams sp{1.0, 1.2};
    const double h = 1e-3;
    // d^2/dx^2 psi_ho = -s^2 psi_ho
    double s = 1.4;
    auto fx = [&](double x) { return bases::psi_ho(sp, s, {0.9, x}).value; };
    Complex v = bases::psi_ho(sp, s, {0.9, 0.2}).value;
    CHECK(std::abs(d2(fx, 0.2, h) + s * s * v) < 1e-6 * std::abs(v) * s * s);
    // d^2/dphi^2 psi_s = -m^2 psi_s
    int m = 3;
    auto fp = [&](double p) { return bases::psi_s(sp, m, {1.1, p}).value; };
    Complex w = bases::psi_s(sp, m, {1.1, 0.7}).value;
    CHECK(std::abs(d2(fp, 0.7, h) + 9.0 * w) < 1e-6 * std::abs(w) * 9.0);
    // d^2/dtau2^2 psi_eq = -nu^2 psi_eq
    double nu = 2.2;
    auto f2 = [&](double t) {
        return bases::psi_eq(sp, nu, bases::Parity::Plus, {0.5, t}).value;
    };
    Complex q = bases::psi_eq(sp, nu, bases::Parity::Plus, {0.5, -0.1}).value;
    CHECK(std::abs(d2(f2, -0.1, h) + nu * nu * q) < 1e-6 * std::abs(q) * nu * nu);
}

TEST_CASE("angular orthogonality is trapezoid-exact") {
    // 256-point trapezoid on e^{i(m - m')phi}: machine-exact for trig polys
    for (int m : {0, 1, 3})
        for (int mp : {0, 1, 2}) {
            Complex acc = 0.0;
            const int n = 256;
            for (int i = 0; i < n; ++i) {
                double phi = 2.0 * kPi * i / n;
                acc += std::exp(Complex(0.0, (m - mp) * phi));
            }
            acc /= static_cast<double>(n);
            if (m == mp)
                CHECK(std::abs(acc - 1.0) < 1e-14);
            else
                CHECK(std::abs(acc) < 1e-13);
        }
}

TEST_CASE("potentials (figure data)") {
    CHECK(bases::potential_s(0, 1.0) < 0.0); // attractive for m = 0
    CHECK(bases::potential_s(2, 1.0) > 0.0);
    CHECK(bases::potential_eq(1.0, 0.0) == doctest::Approx(0.625));
}
