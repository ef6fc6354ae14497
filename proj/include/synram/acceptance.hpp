// acceptance.hpp — the artifact's acceptance suite: one callable criterion
// per entry, shared by the acceptance test binary and `synram verify-all`.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace synram {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    std::uint64_t elapsed_ms = 0;
};

// Runs criteria 1..13 in order. `seed` drives every randomized harness.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

// Deterministic record stream used by the thread-count determinism check:
// a fixed set of searches and verifications written to an in-memory ledger
// with stable timing, under the given thread budget.
std::string acceptance_ledger_stream(std::uint64_t seed, int threads);

}  // namespace synram
