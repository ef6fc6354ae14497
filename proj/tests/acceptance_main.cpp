// acceptance_main.cpp — runs the acceptance suite, one pass/fail line per
// criterion. Non-zero exit when any criterion fails.
#include <cstdio>

#include "synram/acceptance.hpp"

int main() {
    const auto results = synram::run_acceptance(7);
    bool all = true;
    for (const auto& r : results) {
        std::printf("[%s] criterion %2d (%llu ms): %s — %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    static_cast<unsigned long long>(r.elapsed_ms), r.name.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES");
    return all ? 0 : 1;
}
