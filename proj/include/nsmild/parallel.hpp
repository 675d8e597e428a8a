#pragma once

#include <cstddef>
#include <vector>

namespace nsmild {

// Applies the NSMILD_THREADS cap (if the env var is set) to the OpenMP
// runtime.  Call once from a main().
void apply_thread_cap();

int max_threads();

namespace detail {
inline constexpr int kReductionChunks = 256;
}

// Sum of term(i) for i in [0, n).  The index space is split into a fixed
// number of chunks whose boundaries depend only on n, partial sums are
// combined in chunk order, so the result is bitwise identical for any
// thread count.
template <class F>
double deterministic_sum(std::size_t n, F&& term) {
    if (n == 0) return 0.0;
    const int chunks = static_cast<int>(
        n < static_cast<std::size_t>(detail::kReductionChunks) ? n : detail::kReductionChunks);
    std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
        const std::size_t lo = n * static_cast<std::size_t>(c) / chunks;
        const std::size_t hi = n * static_cast<std::size_t>(c + 1) / chunks;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[c] = s;
    }
    double total = 0.0;
    for (int c = 0; c < chunks; ++c) total += partial[c];
    return total;
}

// Max of term(i) for i in [0, n); max is order-insensitive but the chunked
// form keeps the traversal pattern uniform with deterministic_sum.
template <class F>
double deterministic_max(std::size_t n, F&& term) {
    if (n == 0) return 0.0;
    const int chunks = static_cast<int>(
        n < static_cast<std::size_t>(detail::kReductionChunks) ? n : detail::kReductionChunks);
    std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
    for (int c = 0; c < chunks; ++c) {
        const std::size_t lo = n * static_cast<std::size_t>(c) / chunks;
        const std::size_t hi = n * static_cast<std::size_t>(c + 1) / chunks;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            const double v = term(i);
            if (v > s) s = v;
        }
        partial[c] = s;
    }
    double total = 0.0;
    for (int c = 0; c < chunks; ++c)
        if (partial[c] > total) total = partial[c];
    return total;
}

} // namespace nsmild
