#pragma once

#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace triag {

// Work items are independent and results are written per index, so the
// parallel path is bit-identical to the serial reference.
enum class ExecMode { Serial, OpenMP };

template <class F>
void parallel_for(ExecMode mode, std::size_t n, F&& body) {
#ifdef _OPENMP
    if (mode == ExecMode::OpenMP) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

} // namespace triag
