#include "hyperbasis/geometry.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace hyperbasis::geometry {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + ": non-finite coordinate");
}

} // namespace

AmbientPoint to_ambient(const HorocyclicPoint& p, double R) {
    if (R <= 0.0) throw DomainError("to_ambient: R must be positive");
    if (!(p.y_t > 0.0)) throw DomainError("to_ambient: horocyclic y must be positive");
    check_finite(p.x_t, "to_ambient");
    double s = p.x_t * p.x_t + p.y_t * p.y_t;
    return {R * (s + 1.0) / (2.0 * p.y_t), R * (s - 1.0) / (2.0 * p.y_t),
            R * p.x_t / p.y_t};
}

AmbientPoint to_ambient(const PseudoSphericalPoint& p, double R) {
    if (R <= 0.0) throw DomainError("to_ambient: R must be positive");
    if (p.tau < 0.0) throw DomainError("to_ambient: tau must be >= 0");
    return {R * std::cosh(p.tau), R * std::sinh(p.tau) * std::cos(p.phi),
            R * std::sinh(p.tau) * std::sin(p.phi)};
}

AmbientPoint to_ambient(const EquidistantPoint& p, double R) {
    if (R <= 0.0) throw DomainError("to_ambient: R must be positive");
    check_finite(p.tau1, "to_ambient");
    check_finite(p.tau2, "to_ambient");
    return {R * std::cosh(p.tau1) * std::cosh(p.tau2),
            R * std::cosh(p.tau1) * std::sinh(p.tau2), R * std::sinh(p.tau1)};
}

HorocyclicPoint ho_from_eq(const EquidistantPoint& p) {
    double e = std::exp(p.tau2);
    return {e / std::cosh(p.tau1), e * std::tanh(p.tau1)};
}

EquidistantPoint eq_from_ho(const HorocyclicPoint& p) {
    if (!(p.y_t > 0.0)) throw DomainError("eq_from_ho: y must be positive");
    double tau1 = std::asinh(p.x_t / p.y_t);
    double tau2 = 0.5 * std::log(p.x_t * p.x_t + p.y_t * p.y_t);
    return {tau1, tau2};
}

EquidistantPoint eq_from_ps(const PseudoSphericalPoint& p) {
    double tau1 = std::asinh(std::sinh(p.tau) * std::sin(p.phi));
    double tau2 = std::atanh(std::tanh(p.tau) * std::cos(p.phi));
    return {tau1, tau2};
}

PseudoSphericalPoint ps_from_eq(const EquidistantPoint& p) {
    if (p.tau1 == 0.0 && p.tau2 == 0.0)
        throw DomainError("ps_from_eq: phi undefined at the apex");
    double ch = std::cosh(p.tau1) * std::cosh(p.tau2);
    double tau = std::acosh(std::min(std::max(ch, 1.0), HUGE_VAL));
    double phi = std::atan2(std::tanh(p.tau1), std::sinh(p.tau2));
    if (phi < 0.0) phi += kTwoPi;
    return {tau, phi};
}

PseudoSphericalPoint ps_from_ho(const HorocyclicPoint& p) {
    if (!(p.y_t > 0.0)) throw DomainError("ps_from_ho: y must be positive");
    double s = p.x_t * p.x_t + p.y_t * p.y_t;
    if (p.x_t == 0.0 && p.y_t == 1.0)
        throw DomainError("ps_from_ho: phi undefined at the apex");
    double ch = (s + 1.0) / (2.0 * p.y_t);
    double tau = std::acosh(std::max(ch, 1.0));
    double phi = std::atan2(2.0 * p.x_t, s - 1.0);
    if (phi < 0.0) phi += kTwoPi;
    return {tau, phi};
}

HorocyclicPoint ho_from_ps(const PseudoSphericalPoint& p) {
    double denom = std::cosh(p.tau) - std::sinh(p.tau) * std::cos(p.phi);
    return {1.0 / denom, std::sinh(p.tau) * std::sin(p.phi) / denom};
}

double area_weight(Chart chart, double coord1, double coord2, double R) {
    (void)coord2;
    switch (chart) {
        case Chart::Horocyclic: {
            if (!(coord1 > 0.0)) throw DomainError("area_weight: y must be positive");
            return R * R / (coord1 * coord1); // coord1 = y
        }
        case Chart::PseudoSpherical:
            if (coord1 < 0.0) throw DomainError("area_weight: tau must be >= 0");
            return R * R * std::sinh(coord1); // coord1 = tau
        case Chart::Equidistant:
            return R * R * std::cosh(coord1); // coord1 = tau1
    }
    throw DomainError("area_weight: unknown chart");
}

void beltrami(const AmbientPoint& p, double R, double& x1, double& x2) {
    double c = p.u0 * p.u0 - p.u1 * p.u1 - p.u2 * p.u2;
    if (std::fabs(c - R * R) > 1e-8 * R * R)
        throw DomainError("beltrami: point violates the hyperboloid constraint");
    x1 = R * p.u1 / p.u0;
    x2 = R * p.u2 / p.u0;
}

// --- rational arithmetic ---------------------------------------------------

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw InternalError("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

// --- operator algebra -------------------------------------------------------

void DiffOperator::add_term(const Rational& c, const Monomial& m, int deriv) {
    if (c.is_zero()) return;
    DiffTerm key{m, deriv};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool DiffOperator::is_zero() const { return terms_.empty(); }

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
    DiffOperator r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(c, t.mono, t.deriv);
    return r;
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const {
    DiffOperator r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(Rational(0, 1) - c, t.mono, t.deriv);
    return r;
}

DiffOperator DiffOperator::scaled(const Rational& c, int r_power) const {
    DiffOperator r;
    for (const auto& [t, q] : terms_) {
        Monomial m = t.mono;
        m.r_exp += r_power;
        r.add_term(q * c, m, t.deriv);
    }
    return r;
}

int DiffOperator::max_poly_degree() const {
    int d = 0;
    for (const auto& [t, c] : terms_) {
        (void)c;
        int s = t.mono.exp[0] + t.mono.exp[1] + t.mono.exp[2];
        d = std::max(d, s);
    }
    return d;
}

double DiffOperator::coeff_norm(double R) const {
    double n = 0.0;
    for (const auto& [t, c] : terms_)
        n += std::fabs(c.value()) * std::pow(R, t.mono.r_exp);
    return n;
}

std::string DiffOperator::to_string(const char* const names[3]) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.num;
        if (c.den != 1) os << "/" << c.den;
        os << ")";
        for (int v = 0; v < 3; ++v)
            for (int e = 0; e < t.mono.exp[v]; ++e) os << " " << names[v];
        if (t.mono.r_exp != 0) os << " R^" << t.mono.r_exp;
        os << " d/d" << names[t.deriv];
    }
    return os.str();
}

DiffOperator::Polynomial DiffOperator::apply(const Polynomial& p) const {
    Polynomial out;
    auto acc = [&out](const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = out.find(m);
        if (it == out.end()) {
            out.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [t, c] : terms_) {
        for (const auto& [pm, pc] : p) {
            if (pm.exp[t.deriv] == 0) continue;
            Monomial m = pm;
            Rational d = pc * Rational(pm.exp[t.deriv], 1);
            m.exp[t.deriv] -= 1;
            // multiply by the term's polynomial coefficient
            Monomial prod = m;
            for (int v = 0; v < 3; ++v) prod.exp[v] += t.mono.exp[v];
            prod.r_exp += t.mono.r_exp;
            acc(prod, d * c);
        }
    }
    return out;
}

DiffOperator commutator(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator r;
    // second-order bookkeeping: key = (mono, sorted deriv pair)
    std::map<std::pair<Monomial, std::pair<int, int>>, Rational> second;
    auto acc2 = [&second](Monomial m, int d1, int d2, const Rational& c) {
        if (d1 > d2) std::swap(d1, d2);
        auto key = std::make_pair(m, std::make_pair(d1, d2));
        auto it = second.find(key);
        if (it == second.end()) {
            second.emplace(key, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) second.erase(it);
        }
    };
    auto cross = [&](const DiffOperator& x, const DiffOperator& y, int sign) {
        for (const auto& [tx, cx] : x.terms_) {
            for (const auto& [ty, cy] : y.terms_) {
                Rational c = cx * cy;
                if (sign < 0) c = Rational(0, 1) - c;
                // first order: p_x * d(q_y)/d(deriv_x) * d/d(deriv_y)
                if (ty.mono.exp[tx.deriv] > 0) {
                    Monomial m = ty.mono;
                    Rational d = c * Rational(m.exp[tx.deriv], 1);
                    m.exp[tx.deriv] -= 1;
                    for (int v = 0; v < 3; ++v) m.exp[v] += tx.mono.exp[v];
                    m.r_exp += tx.mono.r_exp;
                    r.add_term(d, m, ty.deriv);
                }
                // second order: p_x q_y d^2/(d_x d_y)
                Monomial m2 = tx.mono;
                for (int v = 0; v < 3; ++v) m2.exp[v] += ty.mono.exp[v];
                m2.r_exp += ty.mono.r_exp;
                acc2(m2, tx.deriv, ty.deriv, c);
            }
        }
    };
    cross(a, b, +1);
    cross(b, a, -1);
    if (!second.empty())
        throw InternalError("commutator: second-order terms failed to cancel");
    return r;
}

// ambient variables (u0, u1, u2) = indices (0, 1, 2)
DiffOperator gen_k1() {
    DiffOperator op;
    Monomial u0;
    u0.exp = {1, 0, 0};
    Monomial u2;
    u2.exp = {0, 0, 1};
    op.add_term(Rational(-1), u0, 2);
    op.add_term(Rational(-1), u2, 0);
    return op;
}

DiffOperator gen_k2() {
    DiffOperator op;
    Monomial u0;
    u0.exp = {1, 0, 0};
    Monomial u1;
    u1.exp = {0, 1, 0};
    op.add_term(Rational(-1), u0, 1);
    op.add_term(Rational(-1), u1, 0);
    return op;
}

DiffOperator gen_m_ambient() {
    DiffOperator op;
    Monomial u1;
    u1.exp = {0, 1, 0};
    Monomial u2;
    u2.exp = {0, 0, 1};
    op.add_term(Rational(1), u1, 2);
    op.add_term(Rational(-1), u2, 1);
    return op;
}

// Beltrami variables (x1, x2) = indices (0, 1)
DiffOperator gen_pi1() {
    DiffOperator op;
    Monomial one;
    op.add_term(Rational(1), one, 0);
    Monomial x1x1;
    x1x1.exp = {2, 0, 0};
    x1x1.r_exp = -2;
    Monomial x1x2;
    x1x2.exp = {1, 1, 0};
    x1x2.r_exp = -2;
    op.add_term(Rational(-1), x1x1, 0);
    op.add_term(Rational(-1), x1x2, 1);
    return op;
}

DiffOperator gen_pi2() {
    DiffOperator op;
    Monomial one;
    op.add_term(Rational(1), one, 1);
    Monomial x2x1;
    x2x1.exp = {1, 1, 0};
    x2x1.r_exp = -2;
    Monomial x2x2;
    x2x2.exp = {0, 2, 0};
    x2x2.r_exp = -2;
    op.add_term(Rational(-1), x2x1, 0);
    op.add_term(Rational(-1), x2x2, 1);
    return op;
}

DiffOperator gen_m_beltrami() {
    DiffOperator op;
    Monomial x1;
    x1.exp = {1, 0, 0};
    Monomial x2;
    x2.exp = {0, 1, 0};
    op.add_term(Rational(1), x1, 1);
    op.add_term(Rational(-1), x2, 0);
    return op;
}

DiffOperator gen_p1() {
    DiffOperator op;
    op.add_term(Rational(1), Monomial{}, 0);
    return op;
}

DiffOperator gen_p2() {
    DiffOperator op;
    op.add_term(Rational(1), Monomial{}, 1);
    return op;
}

DiffOperator gen_l3() { return gen_m_beltrami(); }

ContractionReport contract_generators(double R) {
    if (!(R > 0.0)) throw DomainError("contract_generators: R must be positive");
    DiffOperator pi1 = gen_pi1(), pi2 = gen_pi2(), m = gen_m_beltrami();
    DiffOperator c12 = commutator(pi1, pi2);
    ContractionReport rep;
    rep.exact_m_over_r2 = (c12 == m.scaled(Rational(1), -2));
    rep.exact_pi1_m = (commutator(pi1, m) == pi2);
    rep.exact_m_pi2 = (commutator(m, pi2) == pi1);
    rep.residual_norm = c12.coeff_norm(R);
    rep.m_scale = m.coeff_norm(R);
    return rep;
}

} // namespace hyperbasis::geometry
