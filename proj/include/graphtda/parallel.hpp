#pragma once

#include <cstddef>
#include <cstdint>

namespace graphtda {

/// Selects the serial reference path or the OpenMP path of a kernel.
/// Both paths produce identical results; the serial one is kept as the
/// reference the parallel one is tested against.
enum class Execution { serial, parallel };

/// Caps the OpenMP team size. 0 restores the runtime default.
void set_thread_limit(int threads);
int thread_limit();

/// Reads GRAPHTDA_THREADS and applies it. Returns the value applied
/// (0 when unset or "0").
int apply_thread_env();

/// Runs body(i) for i in [0, n). With Execution::parallel the iterations are
/// distributed over the OpenMP team; body must only write to slot i of its
/// output.
template<typename Body>
void for_each_index(std::size_t n, Body&& body, Execution exec)
{
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    auto const count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i)
        body(static_cast<std::size_t>(i));
}

} // namespace graphtda
