#pragma once

// Normalized wavefunction evaluators for the three subgroup bases on the
// hyperboloid: horocyclic, pseudo-spherical, and the two equidistant
// families (even/odd and the (1,2) Legendre-on-the-cut form), including all
// normalization constants.  Normalizations are assembled in log space so
// large rho (contraction regime, rho ~ kR) stays representable.

#include <complex>

#include "hyperbasis/errors.hpp"
#include "hyperbasis/geometry.hpp"
#include "hyperbasis/specfun.hpp"

namespace hyperbasis::bases {

using Complex = std::complex<double>;

struct SpectralParams {
    double R = 1.0;   // curvature radius, > 0
    double rho = 0.0; // continuous energy label, >= 0
};

enum class Basis { Horocyclic, PseudoSpherical, Equidistant, Equidistant12 };
enum class Parity { Plus, Minus };

struct WaveValue {
    Complex value{0.0, 0.0};
    Basis basis = Basis::Horocyclic;
    int tag = 0; // parity (+1/-1) for EQ, family (1/2) for EQ(1,2), else 0
};

// E = (rho^2 + 1/4) / (2 R^2)
double energy(double R, double rho);

// Psi^HO_{rho s} = N sqrt(|s| y) K_{i rho}(|s| y) e^{i s x} / sqrt(2 pi),
// N = (1/(R pi)) sqrt(2 rho sinh(pi rho)/|s|).  s != 0.
WaveValue psi_ho(const SpectralParams& sp, double s, const geometry::HorocyclicPoint& p);

// Radial factor N sqrt(|s| y) K_{i rho}(|s| y)  (real).
double psi_ho_radial(const SpectralParams& sp, double s, double y);

// Psi^S_{rho m} = N P^{|m|}_{i rho - 1/2}(cosh tau) e^{i m phi} / sqrt(2 pi),
// N = sqrt(rho sinh(pi rho)/(pi R^2)) |Gamma(1/2 - |m| + i rho)|.
WaveValue psi_s(const SpectralParams& sp, int m, const geometry::PseudoSphericalPoint& p);

double psi_s_radial(const SpectralParams& sp, int m, double tau);

// Even/odd equidistant family Psi^{EQ(+-)}_{rho nu}.
WaveValue psi_eq(const SpectralParams& sp, double nu, Parity parity,
                 const geometry::EquidistantPoint& p);

// Unnormalized radial psi^{(+-)}_{rho nu}(tau1) of the hypergeometric forms.
Complex eq_radial(double rho, double nu, Parity parity, double tau1);

// Force one of the two equivalent hypergeometric representations
// (1: tanh^2 argument, 2: -sinh^2 argument); eq_radial switches by region.
Complex eq_radial_form(double rho, double nu, Parity parity, double tau1, int form);

// Normalization constants N^{(+-)}_{rho nu}.
double eq_norm(const SpectralParams& sp, double nu, Parity parity);

// Alternative complete family Psi^{EQ(1,2)}_{rho nu}.
WaveValue psi_eq12(const SpectralParams& sp, double nu, int which,
                   const geometry::EquidistantPoint& p);

// Radial psi^{(1,2)}(tau1): production route (C+ psi+ +- C- psi-) and the
// direct Legendre-on-the-cut route, kept as a cross-check pair.
Complex eq12_radial(double rho, double nu, int which, double tau1);
Complex eq12_radial_ferrers(double rho, double nu, int which, double tau1);

// C^{(+-)}_{rho nu} constants of the (1,2) combination.
Complex eq12_c_plus(double rho, double nu);
Complex eq12_c_minus(double rho, double nu);

// Separated one-dimensional potentials (plot data for the CLI).
double potential_s(int m, double tau);
double potential_eq(double nu, double tau1);

// sinh(pi rho) e^{-pi rho} = (1 - e^{-2 pi rho})/2, the overflow-free factor
// every normalization uses.
double sinh_scaled(double rho);

} // namespace hyperbasis::bases
