#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace phlab {

enum class Exec { Serial, Parallel };

// Calls body(i) for i in [0, n). Each index owns its output slot, so results do not
// depend on the number of workers.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

template <class T, class Body>
std::vector<T> map_indices(std::size_t n, Exec exec, Body&& body) {
    std::vector<T> out(n);
    for_each_index(n, exec, [&](std::size_t i) { out[i] = body(i); });
    return out;
}

inline int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace phlab
