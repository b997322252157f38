#pragma once

// Command-line front end: evaluate wavefunctions/coefficients on grids, run
// the verification suite, run contraction sweeps, and emit
// figure-reproduction data files.  Exit codes: 0 success, 1 failed identity,
// 2 configuration error, 3 numerical failure.

#include <string>
#include <vector>

namespace hyperbasis::cli {

inline constexpr const char* kVersion = "1.0.0";

struct GridSpec {
    double lo = 0.0, hi = 0.0;
    int n = 1;

    // parse "a:b:n" (inclusive endpoints, n samples)
    static GridSpec parse(const std::string& text);
    std::vector<double> values() const;
};

int run(int argc, const char* const argv[]);

} // namespace hyperbasis::cli
