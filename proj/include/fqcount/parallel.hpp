#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace fqcount {

enum class Exec { serial, parallel };

/// Applies fn(i) for i in [0, count). The parallel path uses a dynamic
/// schedule because per-index cost varies widely across a scan; the first
/// exception wins and is rethrown on the calling thread.
template <typename Fn>
void for_each_index(std::size_t count, Exec exec, Fn&& fn) {
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::size_t i = 0; i < count; ++i) {
        try {
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error) continue;
            }
            fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace fqcount
