// bench.cpp — timings for the serial reference kernels against the
// OpenMP-parallel production kernels, plus a 1-thread vs N-thread search.
#include <chrono>
#include <cmath>
#include <cstdio>

#include "synram/parallel.hpp"
#include "synram/ramsey.hpp"
#include "synram/rng.hpp"
#include "synram/uniformity.hpp"

using namespace synram;

namespace {

double seconds(const std::chrono::steady_clock::time_point& a,
               const std::chrono::steady_clock::time_point& b) {
    return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double time_call(F&& f, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) f();
    const auto t1 = std::chrono::steady_clock::now();
    return seconds(t0, t1) / reps;
}

ModFunction random_fn(Rng& rng, long long p) {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Complex> vals(static_cast<std::size_t>(p));
    for (auto& v : vals)
        v = Complex{(2.0 * rng.unit() - 1.0) * s, (2.0 * rng.unit() - 1.0) * s};
    return ModFunction::create(p, std::move(vals));
}

}  // namespace

int main() {
    Rng rng(42);
    const long long p = 499;
    const ModFunction f = random_fn(rng, p);
    Window S(p);
    for (long long n = 1; n <= p; n += 3) S.set(n, true);

    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial s", "parallel s", "speedup");

    {
        volatile double sink = 0;
        const double ts = time_call([&] { sink = std::abs(ref::ap3(f, f, f)); }, 3);
        const double tp = time_call([&] { sink = std::abs(ap3(f, f, f)); }, 3);
        std::printf("%-28s %12.4f %12.4f %7.1fx\n", "ap3 (p=499)", ts, tp, ts / tp);
    }
    {
        volatile double sink = 0;
        const double ts = time_call([&] { sink = std::abs(ref::lambda_s(S, f, f, f)); }, 3);
        const double tp = time_call([&] { sink = std::abs(lambda_s(S, f, f, f)); }, 3);
        std::printf("%-28s %12.4f %12.4f %7.1fx\n", "lambda_S (p=499)", ts, tp, ts / tp);
    }
    {
        const ModFunction g = random_fn(rng, 223);
        volatile double sink = 0;
        const double ts = time_call([&] { sink = ref::gowers_norm_recursive(g, 3); }, 2);
        const double tp = time_call([&] { sink = gowers_norm(g, 3); }, 2);
        std::printf("%-28s %12.4f %12.4f %7.1fx\n", "U^3 recursive (p=223)", ts, tp, ts / tp);
        const double diff = std::abs(ref::gowers_norm_recursive(g, 3) - gowers_norm(g, 3));
        std::printf("  serial/parallel split: %.3e (expect 0, fixed-tree reduction)\n", diff);
    }
    {
        const int saved = thread_budget();
        set_thread_budget(1);
        const double ts = time_call([&] { (void)brauer_number(2, 30); }, 1);
        set_thread_budget(0);
        const double tp = time_call([&] { (void)brauer_number(2, 30); }, 1);
        set_thread_budget(saved);
        std::printf("%-28s %12.4f %12.4f %7.1fx\n", "brauer DFS r=2 (nmax=30)", ts, tp, ts / tp);
    }
    return 0;
}
