#pragma once

#include <cstddef>
#include <exception>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qfisher {

/// Serial is the reference path; Parallel distributes loop iterations over
/// OpenMP threads. Every batch operation writes results by index, so the two
/// modes produce bit-identical output and Serial stays usable as an oracle.
enum class ExecutionMode { Serial, Parallel };

/// Runs body(0..count-1). In Parallel mode iterations are scheduled
/// dynamically (per-item cost varies a lot across n and p); the first
/// exception thrown by any iteration is rethrown after the loop joins.
inline void parallel_for(std::size_t count, ExecutionMode mode,
                         const std::function<void(std::size_t)>& body) {
#ifdef _OPENMP
    if (mode == ExecutionMode::Parallel) {
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(qfisher_parallel_for_error)
                if (!error) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < count; ++i) body(i);
}

inline int worker_count(ExecutionMode mode) {
#ifdef _OPENMP
    if (mode == ExecutionMode::Parallel) return omp_get_max_threads();
#else
    (void)mode;
#endif
    return 1;
}

} // namespace qfisher
