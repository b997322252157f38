#pragma once

// Coordinate charts on the upper hyperboloid sheet u0^2 - u1^2 - u2^2 = R^2,
// transformations between them, area elements, the Beltrami map, and an
// exact symbolic first-order differential-operator algebra used to check
// the so(2,1) / e(2) commutators and the generator contraction.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyperbasis/errors.hpp"

namespace hyperbasis::geometry {

struct AmbientPoint {
    double u0, u1, u2;
};

struct HorocyclicPoint {
    double y_t; // > 0
    double x_t;
};

struct PseudoSphericalPoint {
    double tau; // >= 0
    double phi; // [0, 2 pi)
};

struct EquidistantPoint {
    double tau1, tau2;
};

AmbientPoint to_ambient(const HorocyclicPoint& p, double R);
AmbientPoint to_ambient(const PseudoSphericalPoint& p, double R);
AmbientPoint to_ambient(const EquidistantPoint& p, double R);

HorocyclicPoint ho_from_eq(const EquidistantPoint& p);
EquidistantPoint eq_from_ho(const HorocyclicPoint& p);
EquidistantPoint eq_from_ps(const PseudoSphericalPoint& p);
PseudoSphericalPoint ps_from_eq(const EquidistantPoint& p);
PseudoSphericalPoint ps_from_ho(const HorocyclicPoint& p);
HorocyclicPoint ho_from_ps(const PseudoSphericalPoint& p);

enum class Chart { Horocyclic, PseudoSpherical, Equidistant };

double area_weight(Chart chart, double coord1, double coord2, double R);

// Beltrami image x_mu = R u_mu / u0.
void beltrami(const AmbientPoint& p, double R, double& x1, double& x2);

// --- exact symbolic first-order operators -------------------------------
//
// An operator is a sum of terms  q * v1^e1 v2^e2 v3^e3 * R^er * d/d(v_k)
// with rational q.  Variables are either the ambient (u0,u1,u2) or the
// Beltrami pair (x1,x2); the algebra does not care which.

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool is_zero() const { return num == 0; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct Monomial {
    std::array<int, 3> exp{0, 0, 0}; // variable exponents
    int r_exp = 0;                   // power of the symbolic radius R

    auto operator<=>(const Monomial&) const = default;
};

struct DiffTerm {
    Monomial mono;
    int deriv = 0; // derivative direction index

    bool operator==(const DiffTerm&) const = default;
};

class DiffOperator {
  public:
    DiffOperator() = default;

    void add_term(const Rational& c, const Monomial& m, int deriv);
    bool operator==(const DiffOperator& o) const { return terms_ == o.terms_; }
    bool is_zero() const;
    DiffOperator operator+(const DiffOperator& o) const;
    DiffOperator operator-(const DiffOperator& o) const;
    DiffOperator scaled(const Rational& c, int r_power = 0) const;
    std::size_t term_count() const { return terms_.size(); }
    int max_poly_degree() const;

    // Coefficient-wise norm with R specialized to a numeric value; each
    // polynomial coefficient is evaluated at v = (1,1,1).
    double coeff_norm(double R) const;

    std::string to_string(const char* const names[3]) const;

    // Apply to a polynomial (map monomial -> coefficient), exactly.
    using Polynomial = std::map<Monomial, Rational>;
    Polynomial apply(const Polynomial& p) const;

    friend DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

  private:
    std::map<DiffTerm, Rational> terms_;
};

inline bool operator<(const DiffTerm& a, const DiffTerm& b) {
    if (a.mono != b.mono) return a.mono < b.mono;
    return a.deriv < b.deriv;
}

// [a, b] = ab - ba; second-order contributions must cancel identically
// (InternalError otherwise).
DiffOperator commutator(const DiffOperator& a, const DiffOperator& b);

// so(2,1) generators in ambient variables (K1, K2, M).
DiffOperator gen_k1();
DiffOperator gen_k2();
DiffOperator gen_m_ambient();

// Beltrami-variable generators: pi1 = -K2/R, pi2 = -K1/R, and the rotation.
DiffOperator gen_pi1();
DiffOperator gen_pi2();
DiffOperator gen_m_beltrami();

// Flat-plane generators P1 = d/dx, P2 = d/dy, L3 = x d/dy - y d/dx.
DiffOperator gen_p1();
DiffOperator gen_p2();
DiffOperator gen_l3();

struct ContractionReport {
    bool exact_m_over_r2 = false; // [pi1,pi2] == M/R^2 as symbols
    bool exact_pi1_m = false;     // [pi1,M] == pi2
    bool exact_m_pi2 = false;     // [M,pi2] == pi1
    double residual_norm = 0.0;   // ||[pi1,pi2]|| at numeric R (-> 0 as 1/R^2)
    double m_scale = 0.0;         // ||M|| for comparison
};

ContractionReport contract_generators(double R);

} // namespace hyperbasis::geometry
