#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rkhs::par {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Iterations per reduction block. Fixed so that blocked_sum returns the
/// same bits for any thread count: partial sums are formed per block and
/// accumulated in block order.
inline constexpr std::size_t kSumBlock = 1024;

/// Deterministic parallel reduction of term(0) + ... + term(n-1).
template <class Term>
double blocked_sum(std::size_t n, Term&& term) {
    if (n == 0) return 0.0;
    const std::size_t nblocks = (n + kSumBlock - 1) / kSumBlock;
    std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kSumBlock;
        const std::size_t hi = lo + kSumBlock < n ? lo + kSumBlock : n;
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
        partial[static_cast<std::size_t>(b)] = acc;
    }
    return std::accumulate(partial.begin(), partial.end(), 0.0);
}

/// Serial reference for blocked_sum; kept for consistency tests and for
/// the benchmark target. Differs from blocked_sum only by association order.
template <class Term>
double serial_sum(std::size_t n, Term&& term) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += term(i);
    return acc;
}

template <class Body>
void parallel_for(std::size_t n, Body&& body) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        body(static_cast<std::size_t>(i));
}

}  // namespace rkhs::par
