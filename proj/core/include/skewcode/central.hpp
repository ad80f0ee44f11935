#pragma once

/**
 * @brief Classical polynomials over K = F_q in the indeterminate y:
 * irreducibility, Möbius counting, enumeration of the norm-restricted sets
 * X_{T,s}, s-admissible tuples, and the A/B evaluation sets.
 *
 * X_s is the set of monic irreducible degree-s polynomials over F_q, and for
 * a subgroup T ≤ F_{q0}^* (q = q0^r):
 *   X_{T,s} = { F ∈ X_s : N_{F_q/F_{q0}}((-1)^s F(0)) ∈ T }.
 * The D-family set Z_{T,s} is X_{T,s} with q0 = q and T the squares.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewcode/poly.hpp"
#include "skewcode/tower.hpp"

namespace skewcode {

/// The multiplicative subgroup T = {β ∈ F_{q0}^* : β^order = 1} of the
/// subfield F_{q0} of K, q = q0^r.
struct SubgroupSpec {
    std::uint64_t q0 = 0;
    std::uint64_t order = 0;  // divides q0 - 1; order = q0 - 1 is the full group
};

int mobius(int n);

/// |X_s| = (1/s) Σ_{d|s} μ(s/d) q^d.
std::int64_t count_Xs(std::uint64_t q, int s);
/// |X_{T,s}| = (|T| / (s (q0-1))) Σ_{d|s} μ(s/d) (q^d - 1) gcd(s/d, (q0-1)/|T|).
std::int64_t count_XTs(std::uint64_t q, int s, const SubgroupSpec& T);
/// D-family count: X_{T,s} with q0 = q and T = squares (q odd).
std::int64_t count_maxD(std::uint64_t q, int s);

/// Squares subgroup of F_q^* (q odd).
SubgroupSpec squares_subgroup(std::uint64_t q);

bool is_irreducible_over_K(const TowerContext& tw, const poly::Poly& F);

/// All monic irreducible degree-s polynomials over K in canonical order.
std::vector<poly::Poly> enumerate_Xs(const TowerContext& tw, int s,
                                     std::uint64_t cap = (1u << 20));
/// The norm-restricted subset X_{T,s}, canonical order.
std::vector<poly::Poly> enumerate_XTs(const TowerContext& tw, int s,
                                      const SubgroupSpec& T,
                                      std::uint64_t cap = (1u << 20));
/// Z_{T,s}: q0 = q, T = squares.
std::vector<poly::Poly> enumerate_ZTs(const TowerContext& tw, int s,
                                      std::uint64_t cap = (1u << 20));

/// t distinct monic irreducible degree-s polynomials over K, none equal to y,
/// plus their product H; provenance records a λ-scaling construction.
struct AdmissibleTuple {
    std::vector<poly::Poly> polys;
    poly::Poly H;
    std::optional<poly::Poly> base;          // F when built by λ-scaling
    std::optional<std::vector<Elt>> lambdas; // λ_1..λ_t in K^*
    int t() const { return static_cast<int>(polys.size()); }
    int s() const { return polys.empty() ? 0 : poly::degree(polys[0]); }
};

/// λ-scaling construction F_i(y) = λ_i^{-s} F(λ_i y); requires the λ_i^s to be
/// pairwise distinct.
AdmissibleTuple make_tuple(const TowerContext& tw, const poly::Poly& F,
                           const std::vector<Elt>& lambdas);
/// Wrap explicitly given polynomials (validated by validate_admissible).
AdmissibleTuple tuple_from_polys(const TowerContext& tw,
                                 std::vector<poly::Poly> polys);

struct TupleCertificate {
    bool valid = false;
    int failing_index = -1;  // -1: no failure
    std::string reason;
    bool lclm_checked = false;  // lclm(F_i(x^n)) = H(x^n) verified
};
/// Full admissibility check; the lclm identity is verified when
/// check_lclm is set (feasible for nst up to a few dozen).
TupleCertificate validate_admissible(const TowerContext& tw,
                                     const AdmissibleTuple& tuple,
                                     bool check_lclm);

/// A_{T,s}: one canonical root in F_{q^s} per polynomial of X_{T,s}.
std::vector<Elt> eval_set_A(const TowerContext& tw, int s, const SubgroupSpec& T,
                            std::uint64_t cap = (1u << 20));
/// B_{T,s}: one canonical root per polynomial of Z_{T,s} (q a square, q odd).
std::vector<Elt> eval_set_B(const TowerContext& tw, int s,
                            std::uint64_t cap = (1u << 20));

}  // namespace skewcode
