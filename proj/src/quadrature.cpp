#include "hyperbasis/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace hyperbasis::quadrature {

namespace {

// G7/K15 node/weight table (positive abscissas; node 0 first).
struct GK15 {
    double x[8];  // 0, then 7 positive Kronrod abscissas
    double wk[8]; // Kronrod weights
    double wg[4]; // Gauss weights for x[2], x[4], x[6] ... (even indices)
};

const GK15 kGK = {
    {0.000000000000000000e+00, 2.077849550078984676e-01, 4.058451513773971669e-01,
     5.860872354676911303e-01, 7.415311855993944399e-01, 8.648644233597690727e-01,
     9.491079123427585245e-01, 9.914553711208126392e-01},
    {2.094821410847278280e-01, 2.044329400752988924e-01, 1.903505780647854099e-01,
     1.690047266392679028e-01, 1.406532597155259187e-01, 1.047900103222501838e-01,
     6.309209262997855329e-02, 2.293532201052922496e-02},
    {4.179591836734693878e-01, 3.818300505051189449e-01, 2.797053914892766679e-01,
     1.294849661688696933e-01}};

struct Panel {
    Complex integral;
    double err;
};

Panel gk15(const Integrand& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Complex f0 = f(c);
    Complex k = kGK.wk[0] * f0;
    Complex g = kGK.wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        Complex fi = f(c + h * kGK.x[i]) + f(c - h * kGK.x[i]);
        k += kGK.wk[i] * fi;
        if ((i & 1) == 0) g += kGK.wg[i / 2] * fi;
    }
    k *= h;
    g *= h;
    // conservative: |K15 - G7| bounds the K15 error with a wide margin
    double err = std::max(std::abs(k - g), std::abs(k) * 5e-17);
    return {k, err};
}

} // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadAccuracy& acc) {
    if (a == b) return {Complex(0.0), 0.0, 0};
    struct Seg {
        double a, b;
        Panel p;
        int depth;
    };
    std::vector<Seg> stack;
    Panel whole = gk15(f, a, b);
    stack.push_back({a, b, whole, 0});
    Complex total = 0.0;
    double err = 0.0;
    long nodes = 15;
    double scale = std::abs(whole.integral);
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        double tol = std::max(acc.abs_tol, acc.rel_tol * std::max(scale, std::abs(s.p.integral)));
        if (s.p.err <= tol * std::max(1.0, (s.b - s.a) / std::max(std::fabs(b - a), 1e-300)) ||
            s.depth >= acc.max_depth) {
            if (s.depth >= acc.max_depth && s.p.err > 1e3 * tol)
                throw AccuracyError("integrate: refinement stalled");
            total += s.p.integral;
            err += s.p.err;
            continue;
        }
        double m = 0.5 * (s.a + s.b);
        Panel p1 = gk15(f, s.a, m);
        Panel p2 = gk15(f, m, s.b);
        nodes += 30;
        if (nodes > acc.max_nodes) throw AccuracyError("integrate: node budget exceeded");
        scale = std::max(scale, std::abs(p1.integral) + std::abs(p2.integral));
        stack.push_back({s.a, m, p1, s.depth + 1});
        stack.push_back({m, s.b, p2, s.depth + 1});
    }
    return {total, err, nodes};
}

QuadratureResult integrate_decay(const Integrand& f, double a,
                                 const QuadAccuracy& acc) {
    Complex total = 0.0;
    double err = 0.0;
    long nodes = 0;
    double left = a;
    double width = 1.0;
    int quiet = 0;
    for (int seg = 0; seg < 200; ++seg) {
        QuadratureResult r = integrate(f, left, left + width, acc);
        total += r.value;
        err += r.err_est;
        nodes += r.nodes;
        double tol = std::max(acc.abs_tol, acc.rel_tol * std::abs(total));
        if (std::abs(r.value) < 0.2 * tol)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3) return {total, err, nodes};
        left += width;
        if (seg >= 2) width *= 1.6;
    }
    throw AccuracyError("integrate_decay: tail did not become negligible");
}

namespace {

// Wynn epsilon algorithm on partial sums.
Complex epsilon_extrapolate(const std::vector<Complex>& s) {
    std::size_t n = s.size();
    std::vector<Complex> e0(n, Complex(0.0)), e1 = s;
    Complex best = s.back();
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<Complex> e2(n - k);
        for (std::size_t j = 0; j + k < n; ++j) {
            Complex d = e1[j + 1] - e1[j];
            if (std::abs(d) < 1e-300) return e1[j + 1];
            e2[j] = e0[j + 1] + 1.0 / d;
        }
        e0 = e1;
        e1 = e2;
        if (k % 2 == 0 && !e1.empty()) best = e1.back();
    }
    return best;
}

} // namespace

QuadratureResult integrate_osc(const Integrand& f, double a, double freq_hint,
                               const QuadAccuracy& acc) {
    if (freq_hint <= 0.0) return integrate_decay(f, a, acc);
    double period = std::numbers::pi_v<double> / freq_hint;
    double err = 0.0;
    long nodes = 0;
    std::vector<Complex> partial;
    Complex run = 0.0;
    double left = a;
    int quiet = 0;
    const int max_seg = 4000;
    for (int seg = 0; seg < max_seg; ++seg) {
        QuadratureResult r = integrate(f, left, left + period, acc);
        run += r.value;
        err += r.err_est;
        nodes += r.nodes;
        partial.push_back(run);
        double tol = std::max(acc.abs_tol, acc.rel_tol * std::abs(run));
        if (std::abs(r.value) < 0.2 * tol)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3) return {run, err, nodes};
        left += period;
        if (partial.size() >= 24 && seg % 8 == 0) {
            // slow decay: accelerate the alternating panel sums
            std::vector<Complex> tail(partial.end() - 24, partial.end());
            Complex ex = epsilon_extrapolate(tail);
            Complex ex2 = epsilon_extrapolate(
                std::vector<Complex>(partial.end() - 16, partial.end()));
            if (std::abs(ex - ex2) < std::max(acc.abs_tol, acc.rel_tol * std::abs(ex)))
                return {ex, err + std::abs(ex - ex2), nodes};
        }
    }
    // final extrapolation attempt
    if (partial.size() >= 8) {
        Complex ex = epsilon_extrapolate(partial);
        return {ex, err + std::abs(ex - partial.back()) * 0.1, nodes};
    }
    throw AccuracyError("integrate_osc: did not converge");
}

QuadratureResult integrate_tanh_sinh(const Integrand& f, double a, double b,
                                     const QuadAccuracy& acc) {
    // nodes x_k = tanh(pi/2 sinh(kh)); abscissas are formed from the stable
    // endpoint distance 1 - |x_k| so integrable endpoint singularities keep
    // full precision.
    double hw = 0.5 * (b - a);
    const double pi_2 = 1.5707963267948966;
    long nodes = 0;

    auto level_sum = [&](double h, int k0, int stride) {
        Complex s = 0.0;
        for (int k = k0;; k += stride) {
            double u = k * h;
            double v = pi_2 * std::sinh(u);
            double ch = std::cosh(v);
            double w = pi_2 * std::cosh(u) / (ch * ch);
            double omx; // 1 - tanh(v)
            if (v > 350.0) {
                omx = 2.0 * std::exp(-2.0 * v);
            } else {
                double e = std::exp(-2.0 * v);
                omx = 2.0 * e / (1.0 + e);
            }
            if (w < 1e-300 || omx * std::fabs(hw) < 1e-300) break;
            double xp = b - hw * omx;
            double xm = a + hw * omx;
            s += w * (f(xp) + f(xm));
            nodes += 2;
        }
        return s;
    };

    double h = 1.0;
    Complex sum = pi_2 * f(a + hw) + level_sum(h, 1, 1);
    ++nodes;
    Complex prev_sum = sum * h;
    for (int level = 1; level <= 12; ++level) {
        h *= 0.5;
        Complex add = level_sum(h, 1, 2);
        Complex cur = prev_sum * 0.5 + add * h;
        double diff = std::abs(cur - prev_sum);
        prev_sum = cur;
        if (diff < std::max(acc.abs_tol, acc.rel_tol * std::abs(cur)) && level >= 3)
            return {cur * hw, std::max(diff, std::abs(cur) * 1e-15) * std::fabs(hw), nodes};
    }
    return {prev_sum * hw, std::abs(prev_sum) * 1e-8 * std::abs(hw), nodes};
}

} // namespace hyperbasis::quadrature
