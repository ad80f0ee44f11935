#pragma once

/**
 * @brief JSON documents for the CLI pipelines: field specs, counting tables,
 * code handles with verdicts and certificates, nuclear profiles, and exported
 * generator matrices.
 *
 * Schema conventions: every document carries "schema_version"; field elements
 * are little-endian F_p coefficient arrays; polynomials are arrays of
 * elements by ascending degree.  Documents are emitted with sorted keys, so
 * identical inputs give byte-identical output.
 */

#include <cstdint>
#include <string>

#include "skewcode/invariants.hpp"
#include "skewcode/selftest.hpp"

namespace skewcode {

/// Counting table for X_{T,s}: Möbius counts plus the brute-force
/// enumeration cross-check.
std::string count_document(const TowerContext& tw, int s, const SubgroupSpec& T);

/// Code parameters, basis, and twist-condition certificate; distance and
/// optimality sections are appended when provided.
std::string code_document(const CodeHandle& code,
                          const DistanceResult* dist = nullptr,
                          const OptimalityVerdict* verdict = nullptr);

/// Nuclear profile: {"sizes_log_p": [...], "hypotheses_met": ...,
/// "closed_form_match": ...} plus the subring witness bases.
std::string profile_document(const CodeHandle& code, const NuclearProfile& prof);

/// Generator matrices: the matrix realization of every basis codeword
/// (sum-rank families) or the evaluation vectors (MDS families).
std::string generators_document(const CodeHandle& code, RealizeMode mode,
                                std::uint64_t seed = 0xC0DE5EED);

/// Machine-readable selftest report.
std::string selftest_document(const std::vector<CriterionResult>& report);

}  // namespace skewcode
