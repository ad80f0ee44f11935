#pragma once

/**
 * @brief Nuclear parameters of a sum-rank code in the quotient-ring
 * representation: left/right idealizers, centralizer, and center, computed as
 * exact F_p-linear algebra; the normalize-to-unital transform; closed-form
 * profiles of the known and new families; and novelty verdicts.
 *
 * For C ⊆ R/RH_F(x^n):
 *   I_ℓ(C) = {g : gC ⊆ C},   I_r(C) = {g : Cg ⊆ C},
 *   Cen(C) = {g : ga = ag ∀a ∈ C},   Z(C) = I_ℓ(C) ∩ Cen(C),
 * and the nuclear parameters are (|C|, |I_ℓ(C)|, |I_r(C)|, |Cen(C')|,
 * |Z(C')|) with C' an equivalent code containing 1.  Profiles are invariant
 * under the restricted code equivalence (no transpositions), so differing
 * profiles prove inequivalence; equal profiles are inconclusive.
 */

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "skewcode/codes.hpp"

namespace skewcode {

enum class SubringKind { Il, Ir, Cen, Z };

struct SubringResult {
    SubringKind kind;
    int dim_p = 0;  // dimension over F_p
    std::vector<QuotElem> basis;
};

/**
 * Solves the F_p-linear membership system for the requested subring of the
 * quotient ring.  Cen and Z are only meaningful on a code containing 1
 * (throws std::invalid_argument otherwise); call normalize_unital first.
 * Sum-rank families only.
 */
SubringResult subring_invariant(const CodeHandle& code, SubringKind kind);

/// True iff the class lies in the span of the code's F_p-basis.
bool code_contains(const CodeHandle& code, const QuotElem& a);

/**
 * Right-multiplies the code by the inverse of a full-weight codeword, so the
 * result contains 1 and is equivalent to the input.  A code already
 * containing 1 is returned unchanged.  The search scans codeword indices
 * deterministically up to the budget, then draws seeded random codewords;
 * exhaustion throws std::runtime_error (diagnostic only — the constructions
 * always contain a unit).
 */
CodeHandle normalize_unital(const CodeHandle& code,
                            std::uint64_t budget = (1u << 16),
                            std::uint64_t seed = 0x5EEDC0DE);

struct NuclearProfile {
    std::array<long long, 5> sizes_log_p{};  // (|C|, |I_ℓ|, |I_r|, |Cen|, |Z|)
    bool hypotheses_met = false;   // closed-form theorem hypotheses
    bool closed_form_match = false;
    std::vector<QuotElem> il_basis, ir_basis, cen_basis, z_basis;
};

/**
 * The 5-tuple by brute-force linear algebra (idealizers on C, Cen/Z on the
 * unital normalization C'), cross-checked against the family's closed form
 * whenever the theorem hypotheses (S: ks > 2 and k ≤ tn/2; D: ks ≥ 2 and
 * k ≤ tn/2) hold.
 */
NuclearProfile nuclear_parameters(const CodeHandle& code);

/// Families with known closed-form nuclear profiles over ⊕_t M_n(F_{q^s}).
enum class FamilyTag { LRS, ATLRS, TZ, S, D };

/// Parameter point for closed-form profiles; h is the twist Frobenius
/// exponent (ATLRS: j < nse; twisted S: h < ne); twisted applies to S only.
struct ProfileSpec {
    FamilyTag family = FamilyTag::S;
    int p = 0, e = 1, n = 1, s = 1, t = 1, k = 1;
    int h = 0;
    bool twisted = false;
};

/// Closed-form profile as exponents of p.
std::array<long long, 5> closed_form_profile(const ProfileSpec& spec);

/// Extract the ProfileSpec of a built S/D parameter point.
ProfileSpec profile_spec_of(const CodeParams& params);

struct NoveltyVerdict {
    std::string verdict;  // "provably inequivalent" | "inconclusive" |
                          // "same family" | "same parameters"
    std::string reason;
};

/**
 * Compares two parameter points in the same ambient ⊕_t M_n(F_{q^s})
 * (throws std::invalid_argument otherwise).  Fast paths: s = 1 folds the new
 * families into the known ones; untwisted S vs known needs gcd(n,s) > 1;
 * twisted S vs known needs gcd(n,s) ∤ e; D vs known needs s ≥ 3 and
 * gcd(n,s) > 1; S vs D needs 1 < k ≤ tn/2, s ≥ 3, n ∤ sk.  Otherwise the
 * closed-form profiles (entries 2..5) decide or the verdict is inconclusive.
 */
NoveltyVerdict novelty_verdict(const ProfileSpec& a, const ProfileSpec& b);

}  // namespace skewcode
