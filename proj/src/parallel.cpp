// parallel.cpp — thread budget resolution.
#include "synram/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>

namespace synram {

namespace {

int env_thread_cap() {
    const char* raw = std::getenv("SYNRAM_THREADS");
    if (raw == nullptr) return 0;
    const int v = std::atoi(raw);
    return v > 0 ? v : 0;
}

int g_override = 0;

}  // namespace

int thread_budget() {
    if (g_override > 0) return g_override;
    int n = omp_get_max_threads();
    static const int cap = env_thread_cap();
    if (cap > 0) n = std::min(n, cap);
    return std::max(n, 1);
}

void set_thread_budget(int n) { g_override = n > 0 ? n : 0; }

}  // namespace synram
