// Acceptance runner: executes the eleven verification checks with the default
// seed and prints one verdict line per criterion. Exit code 0 only when every
// expected verdict is met. Timing budgets are asserted alongside correctness.
#include "tiltstab/verify.hpp"

#include <cstdio>
#include <string>

int main() {
    using namespace tiltstab;

    // Per-criterion wall-clock budgets, seconds.
    const double budgets[11] = {1, 5, 10, 10, 5, 5, 1, 1, 10, 10, 10};

    std::vector<CheckResult> results;
    try {
        results = run_verification(0);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "[FAIL] suite aborted: %s\n", e.what());
        return 1;
    }

    bool ok = true;
    for (const auto& r : results) {
        const double budget = budgets[r.id - 1];
        const bool in_budget = r.seconds <= budget;
        const bool pass = r.pass && in_budget;
        ok = ok && pass;
        std::printf("[%2d] %-62s %s (%.2fs%s)\n", r.id, r.name.c_str(), pass ? "PASS" : "FAIL", r.seconds,
                    in_budget ? "" : ", over budget");
        if (!pass) std::printf("     %s\n", r.detail.c_str());
    }
    std::printf("%s\n", ok ? "acceptance: all criteria met" : "acceptance: criteria failed");
    return ok ? 0 : 1;
}
