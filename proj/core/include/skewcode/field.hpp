#pragma once

/**
 * @brief Exact arithmetic in a single finite field F_{p^d}.
 *
 * A field is realized as F_p[y]/(m(y)) for a monic irreducible modulus m of
 * degree d.  Elements are stored as canonical indices: the element with
 * coefficient sequence (c_0, ..., c_{d-1}) (low degree first) has index
 * sum_i c_i * p^i.  In particular 0 and 1 are the indices 0 and 1, and the
 * prime subfield occupies the indices 0..p-1.
 *
 * Multiplicative structure is precomputed as discrete-log tables with respect
 * to the canonical generator (the smallest primitive element in the canonical
 * element order), so mul/inv/pow are O(1) table lookups.  This is the hot path
 * of every brute-force distance search, so the table approach matters.
 *
 * Canonical element order: coefficient sequences compared lexicographically
 * from the low-degree coefficient upward, with 0 < 1 < ... < p-1.  The same
 * order governs the default modulus (smallest monic irreducible of the given
 * degree) and every "smallest root / smallest witness" rule in the library.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewcode {

/// Element of a FiniteField, as a canonical index into the field.
using Elt = std::uint32_t;

class FiniteField {
public:
    /// Build F_{p^d} with the canonical (lexicographically smallest) modulus.
    FiniteField(int p, int degree);

    /// Build F_{p^d} with an explicit monic irreducible modulus, given as
    /// coefficients (c_0, ..., c_d) with c_d = 1.  Used by the per-degree
    /// modulus overrides in FieldSpec.
    FiniteField(int p, int degree, std::vector<int> modulus);

    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;

    int characteristic() const { return p_; }
    int degree() const { return deg_; }
    std::uint64_t size() const { return size_; }
    const std::vector<int>& modulus() const { return modulus_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }
    /// Canonical multiplicative generator (smallest primitive element).
    Elt generator() const { return gen_; }

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % ord_];
    }
    Elt inv(Elt a) const;
    /// a^e with the convention 0^0 = 1.
    Elt pow(Elt a, std::uint64_t e) const;
    /// Frobenius power a^{p^h}; h may be any non-negative integer.
    Elt frob(Elt a, std::uint64_t h) const;

    /// Discrete log with respect to generator(); a must be nonzero.
    std::uint64_t dlog(Elt a) const;

    /// Scalar multiplication by an element of the prime subfield.
    Elt scalar_mul(int c, Elt a) const {
        c %= p_;
        if (c < 0) c += p_;
        return mul(static_cast<Elt>(c), a);
    }

    /// Coefficient sequence (c_0, ..., c_{d-1}) of an element.
    std::vector<int> coeffs(Elt a) const;
    Elt from_coeffs(const std::vector<int>& c) const;

    /// Canonical element order: low-degree-first lexicographic comparison.
    bool less(Elt a, Elt b) const;
    /// Index of a in the canonical order (0 = zero element); inverse of nth().
    Elt nth(std::uint64_t i) const;

    /// Multiplicative order of a nonzero element.
    std::uint64_t mult_order(Elt a) const;

    /// Pretty printer: "0", "1", "g^k" for the canonical generator g, used in
    /// diagnostics only.
    std::string to_string(Elt a) const;

    /// The canonically smallest monic irreducible polynomial of the given
    /// degree over F_p, as coefficients (c_0, ..., c_d).
    static std::vector<int> smallest_irreducible(int p, int degree);
    /// Irreducibility of a monic polynomial over F_p (trial division based;
    /// construction-time only).
    static bool is_irreducible_mod_p(int p, const std::vector<int>& poly);

private:
    void build_tables();
    // Slow coefficient-vector product used only while bootstrapping tables.
    std::vector<int> raw_mul(const std::vector<int>& a, const std::vector<int>& b) const;

    int p_ = 0;
    int deg_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t ord_ = 0;  // size_ - 1
    std::vector<int> modulus_;
    Elt gen_ = 0;
    std::vector<Elt> exp_;          // exp_[i] = g^i, length ord_
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
    std::vector<std::uint64_t> prime_factors_;  // distinct prime factors of ord_
};

/**
 * @brief Embedding of F_{p^a} into F_{p^b} for a | b.
 *
 * Realized by mapping the generator-of-representation y of the subfield to the
 * canonically smallest root of the subfield modulus in the superfield.  The
 * inverse map (pull_back) solves the associated F_p-linear system and rejects
 * elements outside the image.
 */
class Embedding {
public:
    Embedding(const FiniteField& sub, const FiniteField& sup);

    const FiniteField& sub() const { return *sub_; }
    const FiniteField& sup() const { return *sup_; }

    Elt apply(Elt a) const;
    /// Inverse of apply; throws std::domain_error if a is not in the image.
    Elt pull_back(Elt a) const;
    bool in_image(Elt a) const;

private:
    const FiniteField* sub_;
    const FiniteField* sup_;
    Elt root_;                       // image of the subfield's y
    std::vector<Elt> power_images_;  // root_^i for i < sub degree
    // Row-reduced data for pull_back: columns are F_p coefficient vectors of
    // root_^i; solved fresh per call (fields are tiny).
    std::vector<std::vector<int>> basis_cols_;
};

}  // namespace skewcode
