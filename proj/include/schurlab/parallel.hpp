#pragma once

#include <cstddef>
#include <exception>

#include <omp.h>

namespace schurlab {

/// OpenMP loop over [0, count) with dynamic scheduling. The first
/// exception thrown by any iteration is rethrown after the loop joins.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
    std::exception_ptr error;
    const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(schurlab_parallel_error)
            {
                if (!error) error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
}

inline int max_threads() { return omp_get_max_threads(); }

}  // namespace schurlab
