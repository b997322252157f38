#include "hyperbasis/parallel.hpp"

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperbasis::parallel {

int worker_threads() {
    static int cached = [] {
        int n = 1;
#ifdef _OPENMP
        n = omp_get_max_threads();
#endif
        if (const char* env = std::getenv("HYPERBASIS_THREADS")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v >= 1) n = static_cast<int>(v);
        }
        return n;
    }();
    return cached;
}

} // namespace hyperbasis::parallel
