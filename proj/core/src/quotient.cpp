#include "skewcode/quotient.hpp"

#include <array>
#include <stdexcept>

namespace skewcode {

namespace {

// Gauss-Jordan inverse over F_p; returns false if singular.
bool invert_fp_matrix(int p, std::vector<std::vector<int>>& M,
                      std::vector<std::vector<int>>& inv) {
    const int d = static_cast<int>(M.size());
    inv.assign(d, std::vector<int>(d, 0));
    for (int i = 0; i < d; ++i) inv[i][i] = 1;
    for (int c = 0; c < d; ++c) {
        int pr = -1;
        for (int r = c; r < d; ++r)
            if (M[r][c] != 0) { pr = r; break; }
        if (pr < 0) return false;
        std::swap(M[c], M[pr]);
        std::swap(inv[c], inv[pr]);
        int lcinv = 1;
        for (int x = 1; x < p; ++x)
            if (x * M[c][c] % p == 1) { lcinv = x; break; }
        for (int j = 0; j < d; ++j) {
            M[c][j] = M[c][j] * lcinv % p;
            inv[c][j] = inv[c][j] * lcinv % p;
        }
        for (int r = 0; r < d; ++r) {
            if (r == c || M[r][c] == 0) continue;
            int f = M[r][c];
            for (int j = 0; j < d; ++j) {
                M[r][j] = ((M[r][j] - f * M[c][j]) % p + p) % p;
                inv[r][j] = ((inv[r][j] - f * inv[c][j]) % p + p) % p;
            }
        }
    }
    return true;
}

std::vector<int> apply_fp_matrix(int p, const std::vector<std::vector<int>>& M,
                                 const std::vector<int>& v) {
    const int d = static_cast<int>(M.size());
    std::vector<int> r(d, 0);
    for (int i = 0; i < d; ++i) {
        long long acc = 0;
        for (int j = 0; j < d; ++j) acc += static_cast<long long>(M[i][j]) * v[j];
        r[i] = static_cast<int>(acc % p);
    }
    return r;
}

void check_ctx(const QuotElem& a, const QuotElem& b) {
    if (a.ctx != b.ctx) throw std::invalid_argument("quotient context mismatch");
}

}  // namespace

QuotCtx::QuotCtx(const TowerContext& tower, AdmissibleTuple tuple)
    : tw_(&tower), R_(tower), tuple_(std::move(tuple)) {
    TupleCertificate cert = validate_admissible(tower, tuple_, /*check_lclm=*/false);
    if (!cert.valid)
        throw std::invalid_argument("inadmissible tuple: " + cert.reason);
    Hinf_ = R_.inflate(tuple_.H);
    for (const auto& Fi : tuple_.polys) Finf_.push_back(R_.inflate(Fi));
}

QuotElem reduce_mod(const SkewPoly& a, const QuotCtx& ctx) {
    return QuotElem{&ctx, ctx.ring().right_mod(a, ctx.Hinf())};
}

QuotElem q_add(const QuotElem& a, const QuotElem& b) {
    check_ctx(a, b);
    return QuotElem{a.ctx, a.ctx->ring().add(a.rep, b.rep)};
}

QuotElem q_sub(const QuotElem& a, const QuotElem& b) {
    check_ctx(a, b);
    return QuotElem{a.ctx, a.ctx->ring().sub(a.rep, b.rep)};
}

QuotElem q_mul(const QuotElem& a, const QuotElem& b) {
    check_ctx(a, b);
    return reduce_mod(a.ctx->ring().mul(a.rep, b.rep), *a.ctx);
}

QuotElem q_one(const QuotCtx& ctx) { return QuotElem{&ctx, ctx.ring().one()}; }
QuotElem q_zero(const QuotCtx& ctx) { return QuotElem{&ctx, {}}; }

int f_weight(const QuotElem& a) {
    if (a.rep.is_zero()) return 0;
    const QuotCtx& c = *a.ctx;
    SkewPoly g = c.ring().gcrd(a.rep, c.Hinf());
    if (g.degree() % c.s() != 0)
        throw std::logic_error("gcrd degree not a multiple of s (unreachable)");
    return c.t() * c.n() - g.degree() / c.s();
}

int f_distance(const QuotElem& a, const QuotElem& b) { return f_weight(q_sub(a, b)); }

std::vector<SkewPoly> crt_split(const QuotElem& a) {
    const QuotCtx& c = *a.ctx;
    std::vector<SkewPoly> out;
    out.reserve(c.t());
    for (int i = 0; i < c.t(); ++i)
        out.push_back(c.ring().right_mod(a.rep, c.Finf(i)));
    return out;
}

std::vector<int> flatten(const QuotElem& a) {
    const QuotCtx& c = *a.ctx;
    const FiniteField& L = c.tower().L();
    const int ne = c.tower().n() * c.tower().e();
    std::vector<int> out(static_cast<std::size_t>(c.fp_dimension()), 0);
    for (int j = 0; j <= a.rep.degree(); ++j) {
        std::vector<int> cc = L.coeffs(a.rep.c[j]);
        for (int b = 0; b < ne; ++b) out[static_cast<std::size_t>(j) * ne + b] = cc[b];
    }
    return out;
}

QuotElem unflatten(const QuotCtx& ctx, const std::vector<int>& coords) {
    const FiniteField& L = ctx.tower().L();
    const int ne = ctx.tower().n() * ctx.tower().e();
    SkewPoly rep;
    rep.c.assign(static_cast<std::size_t>(ctx.rep_degree_bound()), 0);
    for (int j = 0; j < ctx.rep_degree_bound(); ++j) {
        std::vector<int> cc(coords.begin() + static_cast<std::ptrdiff_t>(j) * ne,
                            coords.begin() + static_cast<std::ptrdiff_t>(j + 1) * ne);
        rep.c[j] = L.from_coeffs(cc);
    }
    ctx.ring().trim(rep);
    return QuotElem{&ctx, rep};
}

QuotElem invert_unit(const QuotElem& a) {
    const QuotCtx& c = *a.ctx;
    if (f_weight(a) != c.t() * c.n())
        throw std::domain_error("element is not a unit (weight below tn)");
    const int p = c.tower().p();
    const int d = c.fp_dimension();
    const FiniteField& L = c.tower().L();
    const int ne = c.tower().n() * c.tower().e();
    // Columns: images of the F_p-basis vectors under left multiplication by a.
    std::vector<std::vector<int>> M(d, std::vector<int>(d, 0));
    for (int j = 0; j < c.rep_degree_bound(); ++j)
        for (int b = 0; b < ne; ++b) {
            std::vector<int> cc(ne, 0);
            cc[b] = 1;
            SkewPoly basis;
            basis.c.assign(static_cast<std::size_t>(j) + 1, 0);
            basis.c[j] = L.from_coeffs(cc);
            QuotElem img = reduce_mod(c.ring().mul(a.rep, basis), c);
            std::vector<int> col = flatten(img);
            for (int r = 0; r < d; ++r) M[r][j * ne + b] = col[r];
        }
    std::vector<std::vector<int>> inv;
    if (!invert_fp_matrix(p, M, inv))
        throw std::logic_error("unit has singular multiplication operator (unreachable)");
    std::vector<int> onevec(d, 0);
    onevec[0] = 1;  // the class of 1
    QuotElem b = unflatten(c, apply_fp_matrix(p, inv, onevec));
    return b;
}

int matrix_rank(const FiniteField& F, std::vector<Elt> m, int rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r) * cols + c] != 0) { pr = r; break; }
        if (pr < 0) continue;
        for (int j = 0; j < cols; ++j)
            std::swap(m[static_cast<std::size_t>(rank) * cols + j],
                      m[static_cast<std::size_t>(pr) * cols + j]);
        Elt lcinv = F.inv(m[static_cast<std::size_t>(rank) * cols + c]);
        for (int j = 0; j < cols; ++j) {
            Elt& x = m[static_cast<std::size_t>(rank) * cols + j];
            x = F.mul(lcinv, x);
        }
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            Elt f = m[static_cast<std::size_t>(r) * cols + c];
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j) {
                Elt& x = m[static_cast<std::size_t>(r) * cols + j];
                x = F.sub(x, F.mul(f, m[static_cast<std::size_t>(rank) * cols + j]));
            }
        }
        ++rank;
    }
    return rank;
}

int sum_rank(const TowerContext& tw, const BlockMatrixTuple& m) {
    const FiniteField& E = tw.field_of_degree(m.alphabet_degree);
    int total = 0;
    for (const auto& b : m.blocks) total += matrix_rank(E, b, m.n, m.n);
    return total;
}

BlockMatrixTuple bm_sub(const TowerContext& tw, const BlockMatrixTuple& a,
                        const BlockMatrixTuple& b) {
    if (a.t != b.t || a.n != b.n || a.alphabet_degree != b.alphabet_degree)
        throw std::invalid_argument("block shape mismatch");
    const FiniteField& E = tw.field_of_degree(a.alphabet_degree);
    BlockMatrixTuple r = a;
    for (int i = 0; i < a.t; ++i)
        for (std::size_t j = 0; j < r.blocks[i].size(); ++j)
            r.blocks[i][j] = E.sub(a.blocks[i][j], b.blocks[i][j]);
    return r;
}

BlockMatrixTuple bm_mul_blockwise(const TowerContext& tw, const BlockMatrixTuple& a,
                                  const BlockMatrixTuple& b) {
    if (a.t != b.t || a.n != b.n || a.alphabet_degree != b.alphabet_degree)
        throw std::invalid_argument("block shape mismatch");
    const FiniteField& E = tw.field_of_degree(a.alphabet_degree);
    BlockMatrixTuple r = a;
    const int n = a.n;
    for (int i = 0; i < a.t; ++i)
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                Elt acc = 0;
                for (int k = 0; k < n; ++k)
                    acc = E.add(acc, E.mul(a.blocks[i][static_cast<std::size_t>(x) * n + k],
                                           b.blocks[i][static_cast<std::size_t>(k) * n + y]));
                r.blocks[i][static_cast<std::size_t>(x) * n + y] = acc;
            }
    return r;
}

poly::Poly conjugate_product_base(const TowerContext& tw) {
    const FiniteField& L = tw.L();
    const FiniteField& K = tw.K();
    const Embedding& emb = tw.embed(tw.e(), tw.n() * tw.e());
    const Elt xi = L.from_coeffs({0, 1});
    // ∏_{i<n} (y - σ^i(ξ)) over L, then pull coefficients back to K.
    std::vector<Elt> prod{L.one()};
    for (int i = 0; i < tw.n(); ++i) {
        Elt root = tw.sigma(xi, i);
        std::vector<Elt> next(prod.size() + 1, 0);
        for (std::size_t j = 0; j < prod.size(); ++j) {
            next[j + 1] = L.add(next[j + 1], prod[j]);
            next[j] = L.sub(next[j], L.mul(root, prod[j]));
        }
        prod = std::move(next);
    }
    poly::Poly F(prod.size());
    for (std::size_t j = 0; j < prod.size(); ++j) F[j] = emb.pull_back(prod[j]);
    poly::trim(K, F);
    return F;
}

namespace {

// 3x3 matrices over L for the explicit n = s = 3 realization.
using Mat3 = std::array<Elt, 9>;

Mat3 mat3_mul(const FiniteField& F, const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Elt acc = 0;
            for (int k = 0; k < 3; ++k) acc = F.add(acc, F.mul(a[i * 3 + k], b[k * 3 + j]));
            r[i * 3 + j] = acc;
        }
    return r;
}

Mat3 phi_of_scalar(const TowerContext& tw, Elt a) {
    // diag(a, σ²(a), σ(a))
    const Mat3 z{};
    Mat3 m = z;
    m[0] = a;
    m[4] = tw.sigma(a, 2);
    m[8] = tw.sigma(a, 1);
    return m;
}

Mat3 phi_apply(const TowerContext& tw, const SkewPoly& r, Elt xi) {
    const FiniteField& L = tw.L();
    Mat3 X{};
    X[2] = xi;          // row 0: (0, 0, ξ)
    X[3] = L.one();     // row 1: (1, 0, 0)
    X[7] = L.one();     // row 2: (0, 1, 0)
    Mat3 acc{};
    Mat3 Xp{};          // X^j, starting at identity
    Xp[0] = Xp[4] = Xp[8] = L.one();
    for (int j = 0; j <= r.degree(); ++j) {
        if (r.c[j] != 0) {
            Mat3 term = mat3_mul(L, phi_of_scalar(tw, r.c[j]), Xp);
            for (int k = 0; k < 9; ++k) acc[k] = L.add(acc[k], term[k]);
        }
        if (j < r.degree()) Xp = mat3_mul(L, Xp, X);
    }
    return acc;
}

// The distinguished preimage of λ under N_{L/K}: the smallest power g^k of
// the canonical generator with norm λ.  λ = 1 yields g^0 = 1, so ω_{α^{-1}}
// is the identity on the base component.
Elt canonical_norm_preimage(const TowerContext& tw, Elt lambda) {
    const FiniteField& L = tw.L();
    Elt u = L.one();
    for (std::uint64_t k = 0; k + 1 < L.size(); ++k) {
        if (tw.norm_between(u, tw.e(), tw.n() * tw.e()) == lambda) return u;
        u = L.mul(u, L.generator());
    }
    throw std::logic_error("norm is surjective; unreachable");
}

}  // namespace

struct QuotCtx::GenericRealizationData {
    std::vector<SkewPoly> divisors;          // f_i
    std::vector<Elt> thetas;                 // canonical root of F_i in E
    std::vector<std::vector<std::vector<int>>> basis_inverse;  // per i, over F_p
};

const QuotCtx::GenericRealizationData& QuotCtx::generic_data(std::uint64_t seed) const {
    if (generic_) return *generic_;
    auto data = std::make_shared<GenericRealizationData>();
    const TowerContext& tw = *tw_;
    const FiniteField& L = tw.L();
    const FiniteField& E = tw.field_of_degree(tw.e() * s());
    const Embedding& embKE = tw.embed(tw.e(), tw.e() * s());
    const int p = tw.p();
    const int n = this->n();
    const int sdeg = this->s();
    const int e = tw.e();
    const int dim = n * sdeg * e;  // F_p-dimension of R/Rf_i
    const int ne = n * e;
    for (int i = 0; i < t(); ++i) {
        SkewPoly fi = R_.irr_right_divisor(tuple_.polys[i], seed + static_cast<std::uint64_t>(i));
        // Canonical root of F_i in E.
        Elt theta = 0;
        bool found = false;
        for (std::uint64_t w = 0; w < E.size() && !found; ++w) {
            Elt x = E.nth(w);
            if (poly::evaluate_embedded(embKE, tuple_.polys[i], x) == 0) {
                theta = x;
                found = true;
            }
        }
        if (!found) throw std::logic_error("F_i has no root in F_{q^s} (unreachable)");
        // Basis map: (j, m, b) -> x^j (β_b y^m)(x^n) mod f_i, flattened.
        std::vector<std::vector<int>> B(dim, std::vector<int>(dim, 0));
        for (int j = 0; j < n; ++j)
            for (int m = 0; m < sdeg; ++m)
                for (int b = 0; b < e; ++b) {
                    std::vector<int> kc(e, 0);
                    kc[b] = 1;
                    poly::Poly c(static_cast<std::size_t>(m) + 1, 0);
                    c[m] = tw.K().from_coeffs(kc);
                    SkewPoly elem = R_.right_mod(
                        R_.mul(R_.monomial(j, L.one()), R_.inflate(c)), fi);
                    const int col = (j * sdeg + m) * e + b;
                    for (int dcoef = 0; dcoef <= elem.degree(); ++dcoef) {
                        std::vector<int> cc = L.coeffs(elem.c[dcoef]);
                        for (int bb = 0; bb < ne; ++bb)
                            B[dcoef * ne + bb][col] = cc[bb];
                    }
                }
        std::vector<std::vector<int>> Binv;
        if (!invert_fp_matrix(p, B, Binv))
            throw std::runtime_error(
                "generic realization unavailable: {x^j} is not an eigenring basis here");
        data->divisors.push_back(std::move(fi));
        data->thetas.push_back(theta);
        data->basis_inverse.push_back(std::move(Binv));
    }
    generic_ = std::move(data);
    return *generic_;
}

BlockMatrixTuple realize_matrices(const QuotElem& a, RealizeMode mode,
                                  std::uint64_t seed) {
    const QuotCtx& c = *a.ctx;
    const TowerContext& tw = c.tower();
    BlockMatrixTuple out;
    out.t = c.t();
    out.n = c.n();
    out.alphabet_degree = tw.e() * c.s();

    if (mode == RealizeMode::explicit3x3) {
        if (c.n() != 3 || c.s() != 3)
            throw std::invalid_argument("explicit3x3 requires n = s = 3");
        const poly::Poly base = conjugate_product_base(tw);
        std::vector<Elt> lambdas;
        if (c.tuple().base && c.tuple().lambdas) {
            if (*c.tuple().base != base)
                throw std::invalid_argument(
                    "explicit3x3 requires λ-scaling provenance from the conjugate-product base");
            lambdas = *c.tuple().lambdas;
        } else if (c.t() == 1 && c.tuple().polys[0] == base) {
            lambdas = {tw.K().one()};
        } else {
            throw std::invalid_argument(
                "explicit3x3 requires λ-scaling provenance from the conjugate-product base");
        }
        const FiniteField& L = tw.L();
        const Elt xi = L.from_coeffs({0, 1});
        const SkewPoly Finfl = c.ring().inflate(base);
        for (int i = 0; i < c.t(); ++i) {
            Elt alpha = canonical_norm_preimage(tw, lambdas[i]);
            SkewPoly shifted = a.rep.is_zero()
                                   ? SkewPoly{}
                                   : c.ring().shift_scale(a.rep, L.inv(alpha));
            SkewPoly reduced = c.ring().right_mod(shifted, Finfl);
            Mat3 m = phi_apply(tw, reduced, xi);
            out.blocks.emplace_back(m.begin(), m.end());
        }
        return out;
    }

    // Generic mode.
    const auto& data = c.generic_data(seed);
    const FiniteField& E = tw.field_of_degree(out.alphabet_degree);
    const Embedding& embKE = tw.embed(tw.e(), out.alphabet_degree);
    const FiniteField& L = tw.L();
    const int n = c.n();
    const int sdeg = c.s();
    const int e = tw.e();
    const int ne = n * e;
    const int dim = n * sdeg * e;
    for (int i = 0; i < c.t(); ++i) {
        std::vector<Elt> block(static_cast<std::size_t>(n) * n, 0);
        for (int col = 0; col < n; ++col) {
            SkewPoly v = c.ring().right_mod(
                c.ring().mul(a.rep, c.ring().monomial(col, L.one())), data.divisors[i]);
            std::vector<int> flat(dim, 0);
            for (int dcoef = 0; dcoef <= v.degree(); ++dcoef) {
                std::vector<int> cc = L.coeffs(v.c[dcoef]);
                for (int bb = 0; bb < ne; ++bb) flat[dcoef * ne + bb] = cc[bb];
            }
            std::vector<int> z = apply_fp_matrix(tw.p(), data.basis_inverse[i], flat);
            for (int row = 0; row < n; ++row) {
                // c_row(y) = Σ_m K(z[(row*s+m)e .. +e)) y^m evaluated at θ_i.
                Elt entry = 0;
                Elt theta_pow = E.one();
                for (int m = 0; m < sdeg; ++m) {
                    std::vector<int> kc(z.begin() + (static_cast<std::ptrdiff_t>(row) * sdeg + m) * e,
                                        z.begin() + (static_cast<std::ptrdiff_t>(row) * sdeg + m + 1) * e);
                    Elt km = tw.K().from_coeffs(kc);
                    entry = E.add(entry, E.mul(embKE.apply(km), theta_pow));
                    theta_pow = E.mul(theta_pow, data.thetas[i]);
                }
                block[static_cast<std::size_t>(row) * n + col] = entry;
            }
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

}  // namespace skewcode
