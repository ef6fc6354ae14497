// rng.hpp — seeded, platform-stable random source for the fuzz harnesses.
//
// mt19937_64 output is fixed by the standard; the mappings below avoid
// std::uniform_* distributions, whose streams are implementation-defined.
#pragma once

#include <cstdint>
#include <random>

namespace synram {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi], inclusive. Modulo bias is irrelevant at
    // the ranges used here and keeps the stream reproducible.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    bool coin() { return (next() & 1u) != 0; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace synram
