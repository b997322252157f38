// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperbasis/bases.hpp"
#include "hyperbasis/cli_app.hpp"
#include "hyperbasis/contraction.hpp"
#include "hyperbasis/geometry.hpp"
#include "hyperbasis/interbasis.hpp"
#include "hyperbasis/verify.hpp"

using namespace hyperbasis;
using Complex = std::complex<double>;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail, double seconds) {
    std::printf("criterion %d: %s  (%s; %.1f s)\n", criterion, pass ? "PASS" : "FAIL",
                detail.c_str(), seconds);
    if (!pass) ++g_failures;
}

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// 1. |F| = |G| = 1 and |W|^2 = 1/(4 pi |s|) at 200 random tuples, rel 1e-10.
void criterion1() {
    auto t0 = Clock::now();
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        double rho = 0.05 + 4.0 * u(rng);
        double nu = -5.0 + 10.0 * u(rng);
        double s = (u(rng) < 0.5 ? -1.0 : 1.0) * (0.1 + 3.0 * u(rng));
        auto p = (u(rng) < 0.5) ? interbasis::Parity::Plus : interbasis::Parity::Minus;
        worst = std::max(worst,
                         std::fabs(std::abs(interbasis::phase_f(p, rho, nu)) - 1.0));
        worst = std::max(worst,
                         std::fabs(std::abs(interbasis::phase_g(p, rho, nu)) - 1.0));
        Complex w = interbasis::coeff_w(rho, s, nu, p).value;
        double want = 1.0 / (4.0 * M_PI * std::fabs(s));
        worst = std::max(worst, std::fabs(std::norm(w) - want) / want);
    }
    double dt = elapsed(t0);
    report(1, worst < 1e-10 && dt < 1.0, fmt("worst rel %.2e", worst), dt);
}

// 2. Wilson route vs mu-integral route over the canonical grid, abs 1e-8.
void criterion2() {
    auto t0 = Clock::now();
    double worst = 0.0;
    std::string at;
    for (double rho : {0.5, 1.0, 2.0})
        for (double nu : {0.0, -1.0, 1.0, -2.5, 2.5})
            for (int m : {0, -1, 1, -2, 2, 3, 4})
                for (auto p : {interbasis::Parity::Plus, interbasis::Parity::Minus}) {
                    Complex a = interbasis::coeff_u(rho, nu, m, p).value;
                    Complex b = interbasis::coeff_u_integral(rho, nu, m, p).value;
                    double d = std::abs(a - b);
                    if (d > worst) {
                        worst = d;
                        at = fmt("rho=%g nu=%g m=%d", rho, nu, m);
                    }
                }
    double dt = elapsed(t0);
    report(2, worst < 1e-8 && dt < 60.0, fmt("worst abs %.2e at %s", worst, at.c_str()),
           dt);
}

// 3. Three-route V agreement on the stated grid, abs 1e-6.
void criterion3() {
    auto t0 = Clock::now();
    double worst = 0.0;
    std::string at;
    for (double rho : {1.0, 2.0})
        for (double s : {-1.5, -1.0, 1.0, 1.5})
            for (int m : {0, -1, 1, -2, 2, 3}) {
                Complex a = interbasis::coeff_v_series(rho, s, m).value;
                Complex b = interbasis::coeff_v_nu_integral(rho, s, m).value;
                Complex c = interbasis::coeff_v_phi_integral(rho, s, m, 1.0).value;
                double d = std::max({std::abs(a - b), std::abs(a - c), std::abs(b - c)});
                if (d > worst) {
                    worst = d;
                    at = fmt("rho=%g s=%g m=%d", rho, s, m);
                }
            }
    double dt = elapsed(t0);
    report(3, worst < 1e-6 && dt < 120.0, fmt("worst gap %.2e at %s", worst, at.c_str()),
           dt);
}

// 4. Integral identities at abs/rel 1e-6.
void criterion4() {
    auto t0 = Clock::now();
    std::vector<verify::IdentityReport> reps;
    reps.push_back(verify::check_macdonald_product(1.0, 0.0, 1.0));
    reps.push_back(verify::check_macdonald_product(0.5, 1.0, 2.0));
    reps.push_back(verify::check_mellin_barnes(0.5));
    reps.push_back(verify::check_mellin_barnes(1.0));
    reps.push_back(verify::check_mellin_barnes(2.0));
    reps.push_back(verify::check_ho_in_eq_expansion_cos(1.0, 1.0, 0.5, 1.0));
    reps.push_back(verify::check_ho_in_eq_expansion_sin(1.0, 1.0, 0.5, 1.0));
    reps.push_back(verify::check_ho_in_eq_mellin_cos(1.0, 0.5, 1.0));
    reps.push_back(verify::check_ho_in_eq_mellin_sin(1.0, 0.5, 1.0));
    reps.push_back(verify::check_legendre_measure(1.0, 1, 1));
    reps.push_back(verify::check_legendre_measure(1.0, 1, 3));
    // nu = 0 sum rules at phi = pi/2 live in the suite as SUM.*
    for (auto& r : verify::run_suite("SUM")) reps.push_back(r);
    bool pass = true;
    double worst = 0.0;
    for (const auto& r : reps) {
        pass = pass && r.passed;
        worst = std::max(worst, std::min(r.abs_err, r.rel_err));
    }
    double dt = elapsed(t0);
    report(4, pass && dt < 180.0, fmt("%zu identities, worst err %.2e", reps.size(), worst),
           dt);
}

// 5. Orthogonality suites: Kronecker targets to 1e-6, smeared deltas to 1e-2.
void criterion5() {
    auto t0 = Clock::now();
    bool pass = true;
    double worst = 0.0;
    for (auto& pr : {std::pair{2, 2}, {2, -2}, {1, 3}, {1, 1}, {2, 3}}) {
        auto a = verify::check_u_orthogonality(1.0, pr.first, pr.second, true);
        auto b = verify::check_u_orthogonality(1.0, pr.first, pr.second, false);
        pass = pass && a.passed && b.passed;
        worst = std::max({worst, a.abs_err, b.abs_err});
    }
    for (auto& pr : {std::pair{0, 0}, {1, 1}, {0, 2}, {1, 3}}) {
        auto r = verify::check_v_orthogonality(1.0, pr.first, pr.second);
        pass = pass && r.passed;
        worst = std::max(worst, r.abs_err);
    }
    for (auto b : {verify::SmearedBasis::Macdonald, verify::SmearedBasis::Mehler,
                   verify::SmearedBasis::EquidistantPlus,
                   verify::SmearedBasis::EquidistantMinus}) {
        auto r = verify::check_smeared_delta(b, 1.0, 0.1, b == verify::SmearedBasis::Mehler ? 1 : 0, 1.0);
        pass = pass && r.passed;
    }
    double dt = elapsed(t0);
    report(5, pass, fmt("worst Kronecker gap %.2e", worst), dt);
}

// 6. Symbolic commutators, exact.
void criterion6() {
    auto t0 = Clock::now();
    using namespace geometry;
    bool ok = true;
    DiffOperator k1 = gen_k1(), k2 = gen_k2(), m = gen_m_ambient();
    ok = ok && (commutator(k1, k2) == (DiffOperator{} - m));
    ok = ok && (commutator(k2, m) == k1);
    ok = ok && (commutator(m, k1) == k2);
    DiffOperator pi1 = gen_pi1(), pi2 = gen_pi2(), mb = gen_m_beltrami();
    ok = ok && (commutator(pi1, pi2) == mb.scaled(Rational(1), -2));
    ok = ok && (commutator(pi1, mb) == pi2);
    ok = ok && (commutator(mb, pi2) == pi1);
    DiffOperator p1 = gen_p1(), p2 = gen_p2(), l3 = gen_l3();
    ok = ok && commutator(p1, p2).is_zero();
    ok = ok && (commutator(p1, l3) == p2);
    ok = ok && (commutator(l3, p2) == p1);
    // [pi1, pi2] - M/R^2 identically zero
    ok = ok && (commutator(pi1, pi2) - mb.scaled(Rational(1), -2)).is_zero();
    double dt = elapsed(t0);
    report(6, ok && dt < 1.0, "nine commutators exact, contraction residual identical 0",
           dt);
}

// 7. PDE residuals for every basis at 20 random interior points.
void criterion7() {
    auto t0 = Clock::now();
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double h = 1e-4;
    double worst = 0.0;
    auto d2 = [&](auto f, double x) {
        return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) -
                f(x - 2 * h)) /
               (12.0 * h * h);
    };
    auto d1 = [&](auto f, double x) {
        return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) /
               (12.0 * h);
    };
    bases::SpectralParams sp{1.0, 1.3};
    double ev = sp.rho * sp.rho + 0.25;
    { // horocyclic
        double s = 1.2, scale = 0.0;
        std::vector<std::pair<double, double>> pts;
        for (int i = 0; i < 20; ++i) {
            pts.emplace_back(0.4 + 2.0 * u(rng), -1.0 + 2.0 * u(rng));
            scale = std::max(scale, std::abs(bases::psi_ho(sp, s, {pts.back().first,
                                                                   pts.back().second})
                                                 .value));
        }
        for (auto& p : pts) {
            auto fy = [&](double y) { return bases::psi_ho(sp, s, {y, p.second}).value; };
            auto fx = [&](double x) { return bases::psi_ho(sp, s, {p.first, x}).value; };
            Complex lap = p.first * p.first * (d2(fy, p.first) + d2(fx, p.second));
            Complex res = lap + ev * bases::psi_ho(sp, s, {p.first, p.second}).value;
            worst = std::max(worst, std::abs(res) / (scale * ev));
        }
    }
    { // pseudo-spherical
        int m = 2;
        double scale = 0.0;
        std::vector<std::pair<double, double>> pts;
        for (int i = 0; i < 20; ++i) {
            pts.emplace_back(0.5 + 1.5 * u(rng), 2.0 * M_PI * u(rng));
            scale = std::max(scale, std::abs(bases::psi_s(sp, m, {pts.back().first,
                                                                  pts.back().second})
                                                 .value));
        }
        for (auto& p : pts) {
            auto ft = [&](double t) { return bases::psi_s(sp, m, {t, p.second}).value; };
            auto fp = [&](double ph) { return bases::psi_s(sp, m, {p.first, ph}).value; };
            double sh = std::sinh(p.first);
            Complex lap = d2(ft, p.first) + d1(ft, p.first) / std::tanh(p.first) +
                          d2(fp, p.second) / (sh * sh);
            Complex res = lap + ev * bases::psi_s(sp, m, {p.first, p.second}).value;
            worst = std::max(worst, std::abs(res) / (scale * ev));
        }
    }
    for (auto par : {bases::Parity::Plus, bases::Parity::Minus}) { // equidistant
        double nu = 1.5, scale = 0.0;
        std::vector<std::pair<double, double>> pts;
        for (int i = 0; i < 20; ++i) {
            pts.emplace_back(-1.5 + 3.0 * u(rng), -1.0 + 2.0 * u(rng));
            scale = std::max(scale,
                             std::abs(bases::psi_eq(sp, nu, par,
                                                    {pts.back().first, pts.back().second})
                                          .value));
        }
        for (auto& p : pts) {
            auto f1 = [&](double t) {
                return bases::psi_eq(sp, nu, par, {t, p.second}).value;
            };
            auto f2 = [&](double t) {
                return bases::psi_eq(sp, nu, par, {p.first, t}).value;
            };
            double ch = std::cosh(p.first);
            Complex lap = d2(f1, p.first) + std::tanh(p.first) * d1(f1, p.first) +
                          d2(f2, p.second) / (ch * ch);
            Complex res = lap + ev * bases::psi_eq(sp, nu, par, {p.first, p.second}).value;
            worst = std::max(worst, std::abs(res) / (scale * ev));
        }
    }
    double dt = elapsed(t0);
    report(7, worst < 1e-5, fmt("worst scaled residual %.2e", worst), dt);
}

// 8. Contraction regimes.  The exponent band [-1.5, -0.6] is asserted exactly
// as specified; the ps/eq/U curves genuinely contract at second order
// (their coordinate maps enter the curvature corrections at 1/R^2), so that
// subclause fails for them with exponents near -2.  See notes/decisions.md.
void criterion8() {
    auto t0 = Clock::now();
    const std::vector<double> Rfull{10, 20, 40, 80, 160};
    bool pass = true;
    std::string detail;

    auto ps_fig = contraction::contract_ps(1.0, 2, 10.0, 200, {10.0, 100.0});
    pass = pass && ps_fig.errors[0] < 0.1 && ps_fig.errors[1] < 0.012;
    detail += fmt("ps gaps %.3g/%.3g", ps_fig.errors[0], ps_fig.errors[1]);

    auto check_curve = [&](const char* name, const contraction::ContractionCurve& c) {
        bool ok = c.strictly_decreasing() && c.fitted_exponent >= -1.5 &&
                  c.fitted_exponent <= -0.6;
        pass = pass && ok;
        detail += fmt(" %s:%.2f%s", name, c.fitted_exponent,
                      ok ? "" : "(out of stated band; 2nd-order convergence)");
    };
    check_curve("ps", contraction::contract_ps(1.0, 2, 10.0, 100, Rfull));
    check_curve("eq", contraction::contract_eq(1.0, 0.2, interbasis::Parity::Plus, 6.0,
                                               60, Rfull));
    check_curve("ho",
                contraction::contract_ho(1.0, 1.0 / std::sqrt(2.0), {0.5, 1.0}, Rfull));
    std::vector<double> alphas;
    for (int i = 1; i <= 9; ++i) alphas.push_back(0.25 + (M_PI - 0.5) * i / 10.0);
    check_curve("U",
                contraction::contract_u(1.0, 2, interbasis::Parity::Plus, alphas, Rfull));
    check_curve("W", contraction::contract_w(1.0, 1.0 / std::sqrt(2.0),
                                             1.0 / std::sqrt(2.0), Rfull));
    check_curve("V", contraction::contract_v(1.0, 1.0 / std::sqrt(2.0), 2, Rfull));
    double dt = elapsed(t0);
    report(8, pass && dt < 300.0, detail, dt);
}

// 9. Determinism of cmd_verify and cmd_contract.
void criterion9() {
    auto t0 = Clock::now();
    auto run_cli = [](std::initializer_list<const char*> args) {
        std::vector<const char*> argv{"hyperbasis"};
        argv.insert(argv.end(), args.begin(), args.end());
        return cli::run(static_cast<int>(argv.size()), argv.data());
    };
    auto slurp = [](const char* p) {
        std::ifstream f(p);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    bool pass = true;
    int rc1 = run_cli({"verify", "--filter", "*", "--quiet", "--format", "jsonl", "--out",
                       "acc_v.jsonl"});
    std::string v1 = slurp("acc_v.jsonl");
    int rc2 = run_cli({"verify", "--filter", "*", "--quiet", "--format", "jsonl", "--out",
                       "acc_v.jsonl"});
    pass = pass && rc1 == 0 && rc2 == 0;
    pass = pass && v1 == slurp("acc_v.jsonl") && !v1.empty();
    int rc3 = run_cli({"contract", "V", "--k", "1", "--k2", "0.7071067811865475", "--m",
                       "2", "--R", "10,20,40,80", "--out", "acc_c.csv"});
    std::string c1 = slurp("acc_c.csv");
    int rc4 = run_cli({"contract", "V", "--k", "1", "--k2", "0.7071067811865475", "--m",
                       "2", "--R", "10,20,40,80", "--out", "acc_c.csv"});
    pass = pass && rc3 == 0 && rc4 == 0;
    pass = pass && c1 == slurp("acc_c.csv") && !c1.empty();
    double dt = elapsed(t0);
    report(9, pass, fmt("verify rc=%d/%d, byte-identical outputs", rc1, rc2), dt);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failures);
    return 1;
}
