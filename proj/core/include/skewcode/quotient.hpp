#pragma once

/**
 * @brief The quotient ring R/RH_F(x^n) for an s-admissible tuple F:
 * canonical representatives, the F-weight, CRT splitting, matrix
 * realizations into ⊕_{i=1}^t M_n(F_{q^s}), and inversion of units.
 *
 * Finite-field mode throughout (m = n, ℓ = 1): the F-weight of a nonzero
 * class is tn - deg gcrd(rep, H(x^n)) / s, and the CRT realization is an
 * isometry onto the sum-rank metric space of t blocks of n×n matrices over
 * F_{q^s}.
 */

#include <cstdint>
#include <memory>
#include <vector>

#include "skewcode/central.hpp"
#include "skewcode/skew.hpp"

namespace skewcode {

class QuotCtx {
public:
    QuotCtx(const TowerContext& tower, AdmissibleTuple tuple);

    QuotCtx(const QuotCtx&) = delete;
    QuotCtx& operator=(const QuotCtx&) = delete;

    const TowerContext& tower() const { return *tw_; }
    const SkewRing& ring() const { return R_; }
    const AdmissibleTuple& tuple() const { return tuple_; }
    const SkewPoly& Hinf() const { return Hinf_; }
    const SkewPoly& Finf(int i) const { return Finf_[i]; }
    int n() const { return tw_->n(); }
    int s() const { return tuple_.s(); }
    int t() const { return tuple_.t(); }
    /// Degree bound of canonical representatives: n·s·t.
    int rep_degree_bound() const { return n() * s() * t(); }
    /// Dimension of the representative space over F_p.
    int fp_dimension() const { return rep_degree_bound() * tw_->n() * tw_->e(); }

    /// Lazily built data of the generic matrix realization (divisors f_i,
    /// eigenring roots, basis inverses); shared across calls on this context.
    struct GenericRealizationData;
    const GenericRealizationData& generic_data(std::uint64_t seed) const;

private:
    const TowerContext* tw_;
    SkewRing R_;
    AdmissibleTuple tuple_;
    SkewPoly Hinf_;
    std::vector<SkewPoly> Finf_;
    mutable std::shared_ptr<GenericRealizationData> generic_;
};

struct QuotElem {
    const QuotCtx* ctx = nullptr;
    SkewPoly rep;  // canonical representative, degree < nst
    bool operator==(const QuotElem&) const = default;
};

QuotElem reduce_mod(const SkewPoly& a, const QuotCtx& ctx);
QuotElem q_add(const QuotElem& a, const QuotElem& b);
QuotElem q_sub(const QuotElem& a, const QuotElem& b);
QuotElem q_mul(const QuotElem& a, const QuotElem& b);
QuotElem q_one(const QuotCtx& ctx);
QuotElem q_zero(const QuotCtx& ctx);

/// F-weight: 0 for the zero class, else tn - deg gcrd(rep, H(x^n)) / s.
int f_weight(const QuotElem& a);
/// F-distance d_F(a, b) = f_weight(a - b).
int f_distance(const QuotElem& a, const QuotElem& b);

/// Residues rep mod_r F_i(x^n), i = 1..t.
std::vector<SkewPoly> crt_split(const QuotElem& a);

/// Flatten a representative to its F_p coordinate vector (fp_dimension()).
std::vector<int> flatten(const QuotElem& a);
QuotElem unflatten(const QuotCtx& ctx, const std::vector<int>& coords);

/// Inverse of a full-weight (unit) element, via the F_p-linear system of
/// left multiplication.
QuotElem invert_unit(const QuotElem& a);

enum class RealizeMode { explicit3x3, generic };

/// A t-tuple of n×n matrices over the block alphabet F_{q^s}, row-major.
struct BlockMatrixTuple {
    int t = 0;
    int n = 0;
    int alphabet_degree = 0;  // degree of F_{q^s} over F_p
    std::vector<std::vector<Elt>> blocks;
    bool operator==(const BlockMatrixTuple&) const = default;
};

int matrix_rank(const FiniteField& F, std::vector<Elt> m, int rows, int cols);
int sum_rank(const TowerContext& tw, const BlockMatrixTuple& m);
BlockMatrixTuple bm_sub(const TowerContext& tw, const BlockMatrixTuple& a,
                        const BlockMatrixTuple& b);
BlockMatrixTuple bm_mul_blockwise(const TowerContext& tw, const BlockMatrixTuple& a,
                                  const BlockMatrixTuple& b);

/**
 * Matrix realization of a class.
 *
 * explicit3x3 follows the worked n = s = 3 example: Φ(a) = diag(a, σ²(a),
 * σ(a)) for a ∈ L and Φ(x) = [[0,0,ξ],[1,0,0],[0,1,0]] where ξ is the
 * canonical generator of L over K and F its minimal polynomial; tuples with
 * t ≥ 2 must carry λ-scaling provenance from that F, and component i is
 * Φ_F ∘ ω_{α_i^{-1}} with α_i the distinguished norm preimage of λ_i (the
 * smallest power of the canonical generator of L with norm λ_i, so λ_i = 1
 * gives the identity shift).
 *
 * generic works for any admissible tuple: component i is the matrix of left
 * multiplication on R/Rf_i in the basis {x^j mod f_i : j < n} over the
 * eigenring E(f_i) ≅ K[y]/(F_i) ≅ F_{q^s}, with f_i = irr_right_divisor(F_i).
 */
BlockMatrixTuple realize_matrices(const QuotElem& a, RealizeMode mode,
                                  std::uint64_t seed = 0xC0DE5EED);

/// Minimal polynomial over K of the canonical generator ξ of L (the class of
/// y); the "conjugate-product" base polynomial of the explicit example.
poly::Poly conjugate_product_base(const TowerContext& tw);

}  // namespace skewcode
