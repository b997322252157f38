#pragma once

// Identity suite: numerical confirmation of the orthogonality relations,
// integral identities and sum rules satisfied by the subgroup bases and the
// interbasis coefficients, each reported with both sides, the discrepancy
// and a pass/fail against a pinned tolerance.

#include <complex>
#include <string>
#include <vector>

#include "hyperbasis/quadrature.hpp"

namespace hyperbasis::verify {

using Complex = std::complex<double>;

struct IdentityReport {
    std::string id;     // stable identity tag
    std::string params; // worst-case parameter tuple, "k=v k=v" form
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool passed = false;
    double err_budget = 0.0; // sum of the two sides' quadrature estimates

    void finalize(double tolerance);
};

enum class SmearedBasis { Macdonald, Mehler, EquidistantPlus, EquidistantMinus };

// Product formula: pi^2/(4 sqrt(y) cosh(pi rho)) P_{-1/2+i rho}((x^2+y^2+1)/(2y))
//   = int_0^inf K_{i rho}(s) K_{i rho}(s y) cos(s x) ds.
IdentityReport check_macdonald_product(double rho, double xt, double yt);

// Pointwise horocyclic-in-equidistant expansions (cos and sin kernels).
IdentityReport check_ho_in_eq_expansion_cos(double rho, double s, double xt, double yt);
IdentityReport check_ho_in_eq_expansion_sin(double rho, double s, double xt, double yt);
// nu ~ 0 particular cases (Mellin pairs with the 2F1 kernel).
IdentityReport check_ho_in_eq_mellin_cos(double rho, double xt, double yt);
IdentityReport check_ho_in_eq_mellin_sin(double rho, double xt, double yt);

// int U^{m(+-)} U^{m'(+-)*} d nu = (delta_mm' +- delta_m,-m')/2.
IdentityReport check_u_orthogonality(double rho, int m, int mp, bool plus_family);

// int V^m V^{m'*} ds = delta_mm'.
IdentityReport check_v_orthogonality(double rho, int m, int mp);

// int |G(1/4+i(rho-nu)/2) G(1/4+i(rho+nu)/2)|^2 d nu = 4 pi^2 |G(1/2+i rho)|^2.
IdentityReport check_mellin_barnes(double rho);

// P_{-1/2+i rho}(cosh tau2) = (1/4pi^2) int |..|^2/|G(1/2+irho)|^2 e^{i nu tau2} d nu.
IdentityReport check_legendre_fourier(double rho, double tau2);

// int_1^inf P^{|m|} P^{|m'|} dz/(z^2-1) closed forms.
IdentityReport check_legendre_measure(double rho, int m, int mp);

// Weak-sense continuum orthonormality with a Gaussian window in the
// spectral parameter.
IdentityReport check_smeared_delta(SmearedBasis basis, double rho0, double width,
                                   int m_or_zero = 0, double nu = 1.0);

// Wilson polynomial orthogonality against the |Gamma...|^2 weight.
IdentityReport check_wilson_orthogonality(int n, int np, Complex alpha, Complex beta,
                                          Complex gamma, Complex delta);

// Suite driver: runs every registered check whose id matches the filter
// (case-sensitive prefix; "*" matches all; empty matches none); reports come
// back ordered by registry id regardless of execution order.
std::vector<IdentityReport> run_suite(const std::string& filter);

std::vector<std::string> suite_check_ids();

std::string to_jsonl(const IdentityReport& r);
std::string summary_table(const std::vector<IdentityReport>& reports);

} // namespace hyperbasis::verify
