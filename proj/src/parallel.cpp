#include "nsmild/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nsmild {

void apply_thread_cap() {
#ifdef _OPENMP
    const char* env = std::getenv("NSMILD_THREADS");
    if (!env) return;
    try {
        const int cap = std::stoi(env);
        if (cap >= 1 && cap < omp_get_max_threads()) omp_set_num_threads(cap);
    } catch (...) {
        // malformed value: ignore, keep runtime default
    }
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace nsmild
