#pragma once

/**
 * @brief The finite-field tower F_p ⊆ K' ⊆ K = F_q ⊆ L = F_{q^n}, plus the
 * block alphabet E = F_{q^s}, with Frobenius, norm, and truncated-norm
 * machinery.
 *
 * Every field the library touches is an extension of the same prime field and
 * is cached here by its degree over F_p, together with the pairwise
 * embeddings actually requested.  σ always denotes the q-power Frobenius of
 * L/K (AutSpec h = e); arbitrary ρ = (y ↦ y^{p^h}) automorphisms of L are
 * supported through AutSpec.
 */

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "skewcode/field.hpp"

namespace skewcode {

/// Parameters of the tower: q = p^e, L = F_{q^n}, block alphabet F_{q^s}.
/// modulus_override maps a degree over F_p to an explicit monic irreducible
/// modulus (c_0, ..., c_d), used to reproduce the worked examples verbatim.
struct FieldSpec {
    int p = 0;
    int e = 1;
    int n = 1;
    int s = 1;
    std::map<int, std::vector<int>> modulus_override;
};

/// The automorphism y ↦ y^{p^h} of L = F_{p^{ne}}; σ is h = e.  The fixed
/// field inside L is F_{p^{gcd(ne, h)}} (h = 0 gives the whole field).
struct AutSpec {
    int h = 0;
};

class TowerContext {
public:
    explicit TowerContext(FieldSpec spec);

    TowerContext(const TowerContext&) = delete;
    TowerContext& operator=(const TowerContext&) = delete;

    const FieldSpec& spec() const { return spec_; }
    int p() const { return spec_.p; }
    int e() const { return spec_.e; }
    int n() const { return spec_.n; }
    int s() const { return spec_.s; }
    std::uint64_t q() const { return q_; }

    const FiniteField& prime() const { return field_of_degree(1); }
    const FiniteField& K() const { return field_of_degree(spec_.e); }
    const FiniteField& L() const { return field_of_degree(spec_.n * spec_.e); }
    const FiniteField& E() const { return field_of_degree(spec_.s * spec_.e); }

    /// F_{p^d}, built on first use (with the override modulus if configured).
    const FiniteField& field_of_degree(int d) const;
    /// Embedding F_{p^{dsub}} ↪ F_{p^{dsup}}; requires dsub | dsup.
    const Embedding& embed(int dsub, int dsup) const;

    AutSpec sigma_spec() const { return AutSpec{spec_.e}; }

    /// σ^j(a) for a ∈ L (σ = q-power Frobenius).
    Elt sigma(Elt a, int j = 1) const;
    /// a^{p^{h·j mod ne}} for a ∈ L under AutSpec(h).
    Elt frobenius_apply(Elt a, long long j, AutSpec aut) const;
    /// Degree over F_p of the fixed field of AutSpec(h) inside L.
    int fixed_field_degree(AutSpec aut) const;

    /// Relative norm of a ∈ field(dsup) down to the subfield of degree dsub
    /// over F_p; the result is returned as an element of field(dsub).
    Elt norm_between(Elt a, int dsub, int dsup) const;
    /// Same norm, but left inside the superfield representation.
    Elt norm_in_sup(Elt a, int dsub, int dsup) const;

    /// i-th truncated norm of a ∈ L: ∏_{j=0}^{i-1} σ^j(a); i = 0 gives 1.
    Elt truncated_norm(Elt a, int i) const;

    struct SquareResult {
        bool is_square = false;
        bool char2_warning = false;  // characteristic 2: everything is a square
    };
    SquareResult is_square(const FiniteField& field, Elt a) const;

private:
    FieldSpec spec_;
    std::uint64_t q_ = 0;
    mutable std::map<int, std::unique_ptr<FiniteField>> fields_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<Embedding>> embeddings_;
};

}  // namespace skewcode
