#pragma once

/**
 * @brief Dense commutative polynomials over a FiniteField.
 *
 * Coefficient vectors are little-endian in degree with trailing zeros
 * trimmed; the zero polynomial is the empty vector (degree -1 sentinel).
 * These helpers back the central-polynomial module (K[y]) and the eigenring
 * arithmetic of the quotient module.
 */

#include <vector>

#include "skewcode/field.hpp"

namespace skewcode::poly {

using Poly = std::vector<Elt>;

int degree(const Poly& f);  // -1 for the zero polynomial
void trim(const FiniteField& F, Poly& f);
bool is_zero(const Poly& f);
bool is_monic(const FiniteField& F, const Poly& f);

Poly add(const FiniteField& F, const Poly& a, const Poly& b);
Poly sub(const FiniteField& F, const Poly& a, const Poly& b);
Poly mul(const FiniteField& F, const Poly& a, const Poly& b);
Poly scale(const FiniteField& F, Elt c, const Poly& a);
Poly make_monic(const FiniteField& F, Poly a);

/// Euclidean division a = q*b + r, deg r < deg b; b nonzero.
void divmod(const FiniteField& F, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly mod(const FiniteField& F, const Poly& a, const Poly& b);

Poly gcd(const FiniteField& F, Poly a, Poly b);  // monic
/// Extended gcd: g = u*a + v*b with g monic.
Poly gcd_ext(const FiniteField& F, Poly a, Poly b, Poly& u, Poly& v);

Poly powmod(const FiniteField& F, Poly base, std::uint64_t e, const Poly& m);

Elt evaluate(const FiniteField& F, const Poly& f, Elt x);

/// Evaluate f (over subfield) at a point of a superfield via an embedding.
Elt evaluate_embedded(const Embedding& emb, const Poly& f, Elt x);

/// Deterministic irreducibility over the coefficient field.
bool is_irreducible(const FiniteField& F, const Poly& f);

/// f(c*y) followed by multiplication with c^{-deg f}: the λ-scaling
/// F_i(y) = λ^{-s} F(λ y) used to build admissible tuples.
Poly lambda_scale(const FiniteField& F, const Poly& f, Elt lambda);

}  // namespace skewcode::poly
