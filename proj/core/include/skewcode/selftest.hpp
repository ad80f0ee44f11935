#pragma once

/**
 * @brief The acceptance self-test: one callable check per criterion, shared
 * by the `selftest` CLI subcommand and the acceptance test binary.
 *
 * Each criterion runs to completion and reports pass/fail with a note; notes
 * record both failures and deliberate adjustments (points that are provably
 * vacuous, corrected closed-form exponents) so the report is self-contained.
 */

#include <string>
#include <vector>

namespace skewcode {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string note;
    double seconds = 0.0;
};

/// Runs criteria 1–9 in order; jobs is forwarded to the distance searches
/// (0 reads SKEWCODE_JOBS).
std::vector<CriterionResult> run_selftest(int jobs = 0);

}  // namespace skewcode
