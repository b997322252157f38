#pragma once

// Double-double arithmetic (~31 significant digits).  Used internally by the
// special-function kernels where hypergeometric series suffer cancellation
// beyond what double can absorb.  Only the operations the kernels need are
// provided; this is not a general extended-precision library.

#include <cmath>
#include <complex>
#include <cstdint>

namespace hyperbasis::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

// Error-free transformations.
inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return quick_two_sum(s.hi, lo);
}

inline dd add(dd a, double b) {
    dd s = two_sum(a.hi, b);
    double lo = s.lo + a.lo;
    return quick_two_sum(s.hi, lo);
}

inline dd neg(dd a) { return {-a.hi, -a.lo}; }
inline dd sub(dd a, dd b) { return add(a, neg(b)); }
inline dd sub(dd a, double b) { return add(a, -b); }

inline dd mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, lo);
}

inline dd mul(dd a, double b) {
    dd p = two_prod(a.hi, b);
    double lo = p.lo + a.lo * b;
    return quick_two_sum(p.hi, lo);
}

inline dd div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = sub(a, mul(b, q1));
    double q2 = r.hi / b.hi;
    r = sub(r, mul(b, q2));
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return add(q, q3);
}

inline dd div(dd a, double b) { return div(a, dd(b)); }
inline dd recip(dd a) { return div(dd(1.0), a); }

inline bool less_abs(dd a, double b) { return std::fabs(a.hi) < b; }
inline double abs_hi(dd a) { return std::fabs(a.hi); }

// exp(a) for |a| up to ~700.  Splits off the nearest integer multiple of
// ln 2 in dd, then a short Taylor series on the reduced argument.
inline dd exp(dd a) {
    if (a.hi > 709.0) return {HUGE_VAL, 0.0};
    if (a.hi < -745.0) return {0.0, 0.0};
    static const dd ln2{6.931471805599452862e-01, 2.319046813846299558e-17};
    double k = std::round(a.hi / ln2.hi);
    dd r = sub(a, mul(ln2, k));
    // |r| <= ~0.35; Taylor to x^24 keeps the tail below 1e-33.
    dd sum{1.0};
    dd term{1.0};
    for (int i = 1; i <= 24; ++i) {
        term = div(mul(term, r), static_cast<double>(i));
        sum = add(sum, term);
    }
    double scale = std::ldexp(1.0, static_cast<int>(k));
    return {sum.hi * scale, sum.lo * scale};
}

// log(a), a > 0, via one Newton step on double-precision log.
inline dd log(dd a) {
    double y0 = std::log(a.hi);
    dd e = exp(dd(-y0, 0.0));
    dd r = mul(a, e); // a * exp(-y0) ~= 1
    // y = y0 + log(r), log(r) ~= (r-1) - (r-1)^2/2 + (r-1)^3/3
    dd d = sub(r, 1.0);
    dd corr = mul(d, sub(dd(1.0), mul(d, sub(dd(0.5), mul(d, 1.0 / 3.0)))));
    return add(dd(y0), corr);
}

// sin/cos with dd argument reduction modulo pi/2.
inline void sincos(dd a, dd& s, dd& c) {
    static const dd pi_half{1.570796326794896558e+00, 6.123233995736766036e-17};
    double k = std::round(a.hi / pi_half.hi);
    dd r = sub(a, mul(pi_half, k));
    // Taylor on |r| <= ~0.79, carried to r^33 (tail < 1e-36)
    dd r2 = mul(r, r);
    dd ss{0.0}, cc{0.0};
    dd term = r;
    ss = term;
    for (int i = 1; i <= 16; ++i) {
        term = mul(term, r2);
        term = div(term, -static_cast<double>((2 * i) * (2 * i + 1)));
        ss = add(ss, term);
    }
    term = dd(1.0);
    cc = term;
    for (int i = 1; i <= 16; ++i) {
        term = mul(term, r2);
        term = div(term, -static_cast<double>((2 * i - 1) * (2 * i)));
        cc = add(cc, term);
    }
    long q = static_cast<long>(std::llround(k)) & 3L;
    if (q < 0) q += 4;
    switch (q) {
        case 0: s = ss; c = cc; break;
        case 1: s = cc; c = neg(ss); break;
        case 2: s = neg(ss); c = neg(cc); break;
        default: s = neg(cc); c = ss; break;
    }
}

// atan(a) via Newton correction of the double result:
// t0 = atan(a.hi); atan(a) = t0 + atan((a - tan t0)/(1 + a tan t0)).
inline dd atan(dd a) {
    double t0 = std::atan(a.hi);
    dd s, c;
    sincos(dd(t0), s, c);
    // delta = (a*c - s)/(c + a*s), small; one term of atan suffices at
    // second order, keep the cubic for safety.
    dd num = sub(mul(a, c), s);
    dd den = add(c, mul(a, s));
    dd d = div(num, den);
    dd d3 = div(mul(mul(d, d), d), 3.0);
    return add(add(dd(t0), d), neg(d3));
}

inline dd sinh(dd a) {
    dd e = exp(a);
    dd em = recip(e);
    return div(sub(e, em), 2.0);
}

// Minimal complex double-double: enough for hypergeometric series
// accumulation with complex parameters.
struct cdd {
    dd re, im;

    cdd() = default;
    cdd(dd r, dd i) : re(r), im(i) {}
    cdd(double r, double i = 0.0) : re(r), im(i) {}
    explicit cdd(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_complex() const {
        return {re.to_double(), im.to_double()};
    }
};

inline cdd add(cdd a, cdd b) { return {add(a.re, b.re), add(a.im, b.im)}; }
inline cdd sub(cdd a, cdd b) { return {sub(a.re, b.re), sub(a.im, b.im)}; }

inline cdd mul(cdd a, cdd b) {
    return {sub(mul(a.re, b.re), mul(a.im, b.im)),
            add(mul(a.re, b.im), mul(a.im, b.re))};
}

inline cdd mul(cdd a, dd b) { return {mul(a.re, b), mul(a.im, b)}; }
inline cdd mul(cdd a, double b) { return {mul(a.re, b), mul(a.im, b)}; }

inline cdd div(cdd a, double b) { return {div(a.re, b), div(a.im, b)}; }

// Division by an ordinary complex double (series term ratios).
inline cdd div(cdd a, std::complex<double> b) {
    dd nrm = add(two_prod(b.real(), b.real()), two_prod(b.imag(), b.imag()));
    cdd conj_b{dd(b.real()), dd(-b.imag())};
    cdd num = mul(a, conj_b);
    return {div(num.re, nrm), div(num.im, nrm)};
}

inline cdd div(cdd a, cdd b) {
    dd nrm = add(mul(b.re, b.re), mul(b.im, b.im));
    cdd num = mul(a, cdd{b.re, neg(b.im)});
    return {div(num.re, nrm), div(num.im, nrm)};
}

inline double abs_hi(cdd a) { return std::hypot(a.re.hi, a.im.hi); }

// exp(i*theta) with dd phase accuracy.
inline cdd cis(dd theta) {
    dd s, c;
    sincos(theta, s, c);
    return {c, s};
}

} // namespace hyperbasis::detail
