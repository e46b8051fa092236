#include "higgs/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace higgs {

int thread_budget() {
#ifdef _OPENMP
    int budget = omp_get_max_threads();
#else
    int budget = 1;
#endif
    if (const char* env = std::getenv("HIGGS_SPECTRA_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1) budget = std::min(budget, cap);
        } catch (...) {
            // malformed value: keep the default
        }
    }
    return budget;
}

namespace detail {

void run_parallel(std::ptrdiff_t count, void (*trampoline)(void*, std::size_t),
                  void* ctx) {
#ifdef _OPENMP
    const int threads = thread_budget();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < count; ++i)
        trampoline(ctx, static_cast<std::size_t>(i));
#else
    for (std::ptrdiff_t i = 0; i < count; ++i)
        trampoline(ctx, static_cast<std::size_t>(i));
#endif
}

}  // namespace detail

}  // namespace higgs
