#pragma once

/**
 * @brief Arithmetic in the skew polynomial ring R = L[x;σ], L = F_{q^n},
 * σ = q-power Frobenius.
 *
 * Multiplication twists coefficients: (a x^i)(b x^j) = a σ^i(b) x^{i+j}.
 * Division is the right Euclidean division f = q·g + r (g a right divisor
 * when r = 0); gcrd/lclm generate the sum and intersection of left ideals.
 * The center of R is K[x^n]; central polynomials are carried as ordinary
 * polynomials F(y) over K and moved into R via inflate (y ↦ x^n).
 *
 * Coefficients are little-endian in x-degree, trailing zeros trimmed; the
 * zero polynomial is the empty sequence (degree -1 sentinel).
 */

#include <cstdint>
#include <vector>

#include "skewcode/poly.hpp"
#include "skewcode/tower.hpp"

namespace skewcode {

struct SkewPoly {
    std::vector<Elt> c;  // c[i] ∈ L is the coefficient of x^i

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Elt constant_term() const { return c.empty() ? 0 : c[0]; }
    Elt leading() const { return c.empty() ? 0 : c.back(); }
    bool operator==(const SkewPoly&) const = default;
};

/// Operations of R = L[x;σ] bound to one TowerContext.
class SkewRing {
public:
    explicit SkewRing(const TowerContext& tower) : tw_(&tower) {}

    const TowerContext& tower() const { return *tw_; }
    const FiniteField& L() const { return tw_->L(); }

    SkewPoly zero() const { return {}; }
    SkewPoly one() const { return {{L().one()}}; }
    /// x^k with coefficient c (defaults to monomial x^k).
    SkewPoly monomial(int k, Elt coeff) const;

    void trim(SkewPoly& f) const;
    SkewPoly add(const SkewPoly& f, const SkewPoly& g) const;
    SkewPoly sub(const SkewPoly& f, const SkewPoly& g) const;
    SkewPoly neg(const SkewPoly& f) const;
    SkewPoly mul(const SkewPoly& f, const SkewPoly& g) const;
    /// Left multiplication by a scalar c ∈ L.
    SkewPoly scale(Elt c, const SkewPoly& f) const;
    SkewPoly make_monic(SkewPoly f) const;

    /// f = quot·g + rem with rem = 0 or deg rem < deg g; g nonzero.
    void right_divmod(const SkewPoly& f, const SkewPoly& g, SkewPoly& quot,
                      SkewPoly& rem) const;
    SkewPoly right_mod(const SkewPoly& f, const SkewPoly& g) const;
    /// True iff g right-divides f (zero remainder).
    bool right_divides(const SkewPoly& g, const SkewPoly& f) const;

    /// Monic d with Rf + Rg = Rd and d = u·f + v·g.
    SkewPoly gcrd_ext(const SkewPoly& f, const SkewPoly& g, SkewPoly& u,
                      SkewPoly& v) const;
    SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g) const;
    /// Monic m with Rf ∩ Rg = Rm; deg m = deg f + deg g - deg gcrd.
    SkewPoly lclm(const SkewPoly& f, const SkewPoly& g) const;
    SkewPoly lclm_many(const std::vector<SkewPoly>& fs) const;

    /// The shift map f_α = Σ f_i N^i_σ(α) x^i; a ring automorphism of R for
    /// α ≠ 0.
    SkewPoly shift_scale(const SkewPoly& f, Elt alpha) const;

    /// Central inflation: F(y) over K to F(x^n) ∈ R.
    SkewPoly inflate(const poly::Poly& F_over_K) const;
    /// True iff f lies in the center K[x^n]: support on multiples of n with
    /// coefficients in the embedded K.
    bool is_central(const SkewPoly& f) const;
    /// Inverse of inflate on central inputs.
    poly::Poly deflate(const SkewPoly& f) const;

    /**
     * The bound of f: the monic F(y) ∈ K[y] of minimal degree with f a right
     * divisor of F(x^n); F(x^n) generates the largest two-sided ideal in Rf.
     * Requires a nonzero constant term (gcrd(f, x) = 1); constants give F = 1.
     */
    poly::Poly bound_of(const SkewPoly& f) const;

    /**
     * A monic irreducible right divisor of F(x^n) of degree deg F, for F
     * monic irreducible over K, F ≠ y.  Randomized gcrd search with an
     * explicit seed; the certificate (zero remainder and bound_of = F) is
     * re-verified before returning.
     */
    SkewPoly irr_right_divisor(const poly::Poly& F_over_K, std::uint64_t seed) const;

private:
    const TowerContext* tw_;
};

}  // namespace skewcode
