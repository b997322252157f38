#pragma once

// Deterministic data-parallel helpers.  Every sweep writes into a
// preallocated slot per index and reductions happen serially afterwards, so
// results are bit-identical for any thread count.  The serial variant is
// the reference implementation used in tests and the benchmark.

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperbasis::parallel {

// Number of worker threads: HYPERBASIS_THREADS caps the OpenMP default.
int worker_threads();

namespace detail_impl {

template <class Fn>
void run_openmp(std::size_t n, const Fn& fn) {
#ifdef _OPENMP
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_threads())
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
#else
    for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

} // namespace detail_impl

// Serial reference.
template <class Fn>
void for_each_index_serial(std::size_t n, const Fn& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

// OpenMP-parallel when available and enabled, serial otherwise.
template <class Fn>
void for_each_index(std::size_t n, const Fn& fn) {
    if (worker_threads() <= 1 || n < 2) {
        for_each_index_serial(n, fn);
        return;
    }
    detail_impl::run_openmp(n, fn);
}

// map: out[i] = fn(i), deterministic slot writes.
template <class T, class Fn>
std::vector<T> map_indexed(std::size_t n, const Fn& fn) {
    std::vector<T> out(n);
    for_each_index(n, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

template <class T, class Fn>
std::vector<T> map_indexed_serial(std::size_t n, const Fn& fn) {
    std::vector<T> out(n);
    for_each_index_serial(n, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

} // namespace hyperbasis::parallel
