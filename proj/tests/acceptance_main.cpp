/**
 * @brief Acceptance gate: runs every selftest criterion and prints one
 * PASS/FAIL line per criterion, followed by the machine-readable JSON
 * report on stdout.  Exits nonzero if any criterion fails.
 */

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "skewcode/serialize.hpp"

int main(int argc, char** argv) {
    int jobs = 0;
    if (argc > 1) jobs = std::atoi(argv[1]);

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<skewcode::CriterionResult> report = skewcode::run_selftest(jobs);
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    bool all = true;
    for (const auto& r : report) {
        all = all && r.pass;
        std::printf("criterion %d: %s — %s (%.3f s)%s%s%s\n", r.id,
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.note.empty() ? "" : " [", r.note.c_str(),
                    r.note.empty() ? "" : "]");
    }
    std::printf("acceptance: %s (%zu criteria, %.3f s total)\n",
                all ? "PASS" : "FAIL", report.size(), total);
    std::fputs(skewcode::selftest_document(report).c_str(), stdout);
    return all ? 0 : 1;
}
