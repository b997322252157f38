// Benchmark: OpenMP-parallel sweep kernels against the serial reference.
// Workloads mirror the production sweeps: a U-coefficient grid, a
// wavefunction grid, and a contraction R-sweep.

#include <chrono>
#include <cstdio>
#include <vector>

#include "hyperbasis/bases.hpp"
#include "hyperbasis/contraction.hpp"
#include "hyperbasis/interbasis.hpp"
#include "hyperbasis/parallel.hpp"

using namespace hyperbasis;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class F>
double timed(const char* name, const char* mode, const F& f) {
    auto t0 = Clock::now();
    double sink = f();
    auto t1 = Clock::now();
    double dt = seconds(t0, t1);
    std::printf("%-24s %-8s %8.3f s   (checksum %.12g)\n", name, mode, dt, sink);
    return dt;
}

double u_grid(bool parallel_mode) {
    const int n = 4000;
    auto fn = [&](std::size_t i) {
        double nu = -8.0 + 16.0 * static_cast<double>(i) / (n - 1);
        int m = static_cast<int>(i % 7);
        return interbasis::coeff_u(2.0, nu, m, interbasis::Parity::Plus).value.real();
    };
    std::vector<double> out = parallel_mode
                                  ? parallel::map_indexed<double>(n, fn)
                                  : parallel::map_indexed_serial<double>(n, fn);
    double sum = 0.0;
    for (double v : out) sum += v;
    return sum;
}

double psi_grid(bool parallel_mode) {
    const int n = 20000;
    bases::SpectralParams sp{1.0, 2.0};
    auto fn = [&](std::size_t i) {
        double tau = 0.01 + 3.0 * static_cast<double>(i) / n;
        return bases::psi_s_radial(sp, 2, tau);
    };
    std::vector<double> out = parallel_mode
                                  ? parallel::map_indexed<double>(n, fn)
                                  : parallel::map_indexed_serial<double>(n, fn);
    double sum = 0.0;
    for (double v : out) sum += v;
    return sum;
}

double contract_sweep(bool parallel_mode) {
    // contract_ps internally uses the parallel helper; force the serial path
    // by the same API with HYPERBASIS_THREADS left alone -- here we time the
    // direct loop instead.
    std::vector<double> R_list{10, 14, 20, 28, 40, 57, 80, 113, 160};
    if (parallel_mode) {
        auto c = contraction::contract_ps(1.0, 2, 10.0, 200, R_list);
        double s = 0.0;
        for (double e : c.errors) s += e;
        return s;
    }
    double s = 0.0;
    for (double R : R_list) {
        bases::SpectralParams sp{R, R};
        double worst = 0.0;
        for (int j = 0; j <= 200; ++j) {
            double r = 10.0 * j / 200.0;
            double lhs = std::sqrt(R) * bases::psi_s_radial(sp, 2, r / R);
            double rhs = specfun::bessel_j(2, r);
            worst = std::max(worst, std::fabs(lhs - rhs));
        }
        s += worst;
    }
    return s;
}

} // namespace

int main() {
    std::printf("worker threads: %d\n", parallel::worker_threads());
    double s1 = timed("u-coefficient grid", "serial", [] { return u_grid(false); });
    double p1 = timed("u-coefficient grid", "openmp", [] { return u_grid(true); });
    double s2 = timed("wavefunction grid", "serial", [] { return psi_grid(false); });
    double p2 = timed("wavefunction grid", "openmp", [] { return psi_grid(true); });
    double s3 = timed("contraction sweep", "serial", [] { return contract_sweep(false); });
    double p3 = timed("contraction sweep", "openmp", [] { return contract_sweep(true); });
    std::printf("speedups: %.2fx %.2fx %.2fx\n", s1 / p1, s2 / p2, s3 / p3);
    return 0;
}
