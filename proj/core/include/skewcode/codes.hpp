#pragma once

/**
 * @brief The S and D code families in R/RH_F(x^n), their n = 1 MDS
 * specializations as evaluation codes, twist-condition checking and search,
 * exact minimum-distance verification, and Singleton-type verdicts.
 *
 * Sum-rank families (inside a QuotCtx):
 *   S_{n,s,k}(η,ρ,F) = {a_0 + ... + a_{sk-1}x^{sk-1} + ηρ(a_0)x^{sk} : a_i ∈ L},
 *   D_{n,s,k}(γ,F)   = {a_0' + Σ_{1≤i<sk} a_i x^i + γa_0''x^{sk} :
 *                       a_i ∈ L, a_0', a_0'' ∈ L'},  [L:L'] = 2.
 * Both have q^{nsk} elements and are K'-linear, K' = F_q ∩ L^ρ for S and
 * K' = L' ∩ F_q for D.
 *
 * MDS families (evaluation codes over F_{q^s}, Hamming metric):
 *   MDS_S = ev_{A_{T,s}}({a ∈ F_q[x] : deg a ≤ sk, a_{sk} = ηρ(a_0)}),
 *   MDS_D = ev_{B_{T,s}}({a : deg a ≤ sk, a_0, a_{sk}γ^{-1} ∈ F_{q0}}),
 * with q = q0² and T = squares for MDS_D.  Both have q^{sk} codewords.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewcode/central.hpp"
#include "skewcode/quotient.hpp"

namespace skewcode {

enum class Family { S, D, MDS_S, MDS_D };

struct CodeParams {
    Family family = Family::S;
    const QuotCtx* ctx = nullptr;     // S, D
    const TowerContext* tower = nullptr;  // MDS families; n = 1 semantics
    int s = 0;                        // MDS families: alphabet degree over F_q
    int k = 0;                        // 1 ≤ k < tn (sum-rank) / < length (MDS)
    AutSpec rho{0};                   // S: ρ ∈ Aut(L); MDS_S: ρ ∈ Aut(F_q)
    Elt eta = 0;                      // S: η ∈ L; MDS_S: η ∈ F_q
    Elt gamma = 0;                    // D: γ ∈ L^*; MDS_D: γ ∈ F_q^*
    SubgroupSpec subgroup{};          // MDS_S: T ≤ F_{q0}^*, F_{q0} = F_q^ρ
};

/// Outcome of the sufficient twist condition; when it fails, the violating
/// composition (j_1, ..., j_t) — empty for the MDS norm conditions — and a
/// human-readable detail are recorded.
struct TwistVerdict {
    bool ok = false;
    std::vector<int> violating_composition;
    std::string detail;
};

struct CodeHandle {
    CodeParams params;
    int log_p_cardinality = 0;  // |C| = p^this
    int kprime_degree = 0;      // [K' : F_p]
    int length = 0;             // t (block count) or |eval points|
    int max_weight = 0;         // tn (sum-rank) or length (Hamming)
    TwistVerdict condition;
    // F_p-basis of the code: quotient classes for the sum-rank families,
    // evaluation vectors over F_{q^s} for the MDS families.
    std::vector<QuotElem> fp_basis;
    std::vector<std::vector<Elt>> fp_basis_eval;
    std::vector<Elt> eval_points;   // MDS only, in canonical set order
};

/// Validates parameters and assembles the F_p-basis; the twist condition is
/// evaluated and recorded but not required to hold.
CodeHandle build_code(const CodeParams& params);

/**
 * Sufficient optimality condition of the family:
 *   S:  N_{L/K'}(η) · N_{K/K'}((-1)^{sk(n-1)} ∏ F_{i,0}^{j_i}) ≠ 1 for every
 *       composition j_1 + ... + j_t = k (η = 0 passes vacuously);
 *   D:  (-1)^{sk(n-1)} (∏ F_{i,0}^{j_i}) N_{L/K}(γ) a non-square in F_q,
 *       for every composition;
 *   MDS_S: N_{F_q/F_{q0}}(η) ∉ (-1)^{skr} T,  q = q0^r;
 *   MDS_D: (-1)^{sk} γ a non-square in F_q.
 */
TwistVerdict check_twist_condition(const CodeParams& params);

/**
 * Smallest nonzero twist (η for S/MDS_S, γ for D/MDS_D) in the canonical
 * element order passing check_twist_condition, or nullopt after an
 * exhaustive scan.  (η = 0 always passes for the S families and is not
 * reported; it is the untwisted code.)
 */
std::optional<Elt> find_twist(const CodeParams& params);

/// p^{log_p_cardinality}; throws std::overflow_error beyond 2^63.
std::uint64_t code_cardinality(const CodeHandle& code);

/// Codeword of a sum-rank code by mixed-radix F_p-coordinate index.
QuotElem codeword_sumrank(const CodeHandle& code, std::uint64_t index);
/// Evaluation vector of an MDS codeword by the same indexing.
std::vector<Elt> codeword_mds(const CodeHandle& code, std::uint64_t index);

struct DistanceResult {
    int d = 0;
    bool exact = false;             // false: sampled upper bound
    std::uint64_t argmin_index = 0; // smallest minimizing codeword index
    std::uint64_t examined = 0;
    std::uint64_t seed = 0;         // sampling seed when not exact
};

/**
 * Minimum F-weight (sum-rank) or Hamming weight (MDS) over nonzero
 * codewords.  Exact full enumeration while |C| - 1 ≤ cap, else a seeded
 * uniform sample of cap codewords labeled non-exact.  jobs = 0 reads
 * SKEWCODE_JOBS (default 1); the result is schedule-independent.
 */
DistanceResult min_distance(const CodeHandle& code,
                            std::uint64_t cap = (1u << 22), int jobs = 0);

struct OptimalityVerdict {
    bool optimal = false;
    std::string kind;       // "MSRD" or "MDS"
    long long lhs_log_p = 0;  // log_p |C|
    long long rhs_log_p = 0;  // log_p of the Singleton-type bound at d
};

/// Singleton comparison at the measured distance; requires an exact result.
OptimalityVerdict optimality_verdict(const CodeHandle& code,
                                     const DistanceResult& dist);

}  // namespace skewcode
