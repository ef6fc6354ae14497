// parallel.hpp — thread budget and bit-stable reductions.
//
// Every parallel kernel in this library partitions work into per-index
// partials and combines them with a fixed-shape pairwise tree, so results
// are byte-identical for any thread count.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace synram {

// Number of OpenMP threads kernels may use: min(omp_get_max_threads(),
// SYNRAM_THREADS). The env var is read once.
int thread_budget();

// Override for tests and determinism checks; 0 restores the default.
void set_thread_budget(int n);

// Pairwise (fixed-tree) summation; the tree shape depends only on the
// length, never on thread count.
template <typename T>
T pairwise_sum(std::span<const T> xs) {
    const std::size_t n = xs.size();
    if (n == 0) return T{};
    if (n <= 4) {
        T acc = xs[0];
        for (std::size_t i = 1; i < n; ++i) acc += xs[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& xs) {
    return pairwise_sum(std::span<const T>(xs));
}

}  // namespace synram
