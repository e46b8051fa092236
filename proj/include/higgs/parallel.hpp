#pragma once

#include <cstddef>

namespace higgs {

/// Execution policy for the data-parallel kernels (matrix assembly,
/// per-block eigensolves, scan grids). Serial is the reference path the
/// tests compare against; results are identical, iteration per index is
/// independent with no cross-thread reductions.
enum class Exec { serial, parallel };

/// Worker count for Exec::parallel: OpenMP's max, capped by the
/// HIGGS_SPECTRA_THREADS environment variable when set.
int thread_budget();

namespace detail {
void run_parallel(std::ptrdiff_t count, void (*trampoline)(void*, std::size_t),
                  void* ctx);
}

template <typename F>
void parallel_for(Exec exec, std::ptrdiff_t count, F&& body) {
    if (exec == Exec::parallel && count > 1) {
        auto trampoline = [](void* ctx, std::size_t i) {
            (*static_cast<F*>(ctx))(i);
        };
        detail::run_parallel(count, trampoline, &body);
        return;
    }
    for (std::ptrdiff_t i = 0; i < count; ++i)
        body(static_cast<std::size_t>(i));
}

}  // namespace higgs
