#include "skewcode/skew.hpp"

#include <random>
#include <stdexcept>

namespace skewcode {

SkewPoly SkewRing::monomial(int k, Elt coeff) const {
    if (coeff == 0) return {};
    SkewPoly f;
    f.c.assign(static_cast<std::size_t>(k) + 1, 0);
    f.c[k] = coeff;
    return f;
}

void SkewRing::trim(SkewPoly& f) const {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

SkewPoly SkewRing::add(const SkewPoly& f, const SkewPoly& g) const {
    const FiniteField& F = L();
    SkewPoly r;
    r.c.assign(std::max(f.c.size(), g.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        Elt a = i < f.c.size() ? f.c[i] : 0;
        Elt b = i < g.c.size() ? g.c[i] : 0;
        r.c[i] = F.add(a, b);
    }
    trim(r);
    return r;
}

SkewPoly SkewRing::neg(const SkewPoly& f) const {
    const FiniteField& F = L();
    SkewPoly r = f;
    for (Elt& a : r.c) a = F.neg(a);
    return r;
}

SkewPoly SkewRing::sub(const SkewPoly& f, const SkewPoly& g) const {
    return add(f, neg(g));
}

SkewPoly SkewRing::mul(const SkewPoly& f, const SkewPoly& g) const {
    if (f.is_zero() || g.is_zero()) return {};
    const FiniteField& F = L();
    // σ^i(g_j) for all i up to deg f, computed once per row.
    SkewPoly r;
    r.c.assign(f.c.size() + g.c.size() - 1, 0);
    std::vector<Elt> gs = g.c;  // σ^i applied incrementally
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] != 0) {
            for (std::size_t j = 0; j < gs.size(); ++j)
                if (gs[j] != 0) r.c[i + j] = F.add(r.c[i + j], F.mul(f.c[i], gs[j]));
        }
        if (i + 1 < f.c.size())
            for (Elt& b : gs) b = tw_->sigma(b);
    }
    trim(r);
    return r;
}

SkewPoly SkewRing::scale(Elt c, const SkewPoly& f) const {
    if (c == 0) return {};
    const FiniteField& F = L();
    SkewPoly r = f;
    for (Elt& a : r.c) a = F.mul(c, a);
    return r;
}

SkewPoly SkewRing::make_monic(SkewPoly f) const {
    trim(f);
    if (f.is_zero() || f.leading() == L().one()) return f;
    return scale(L().inv(f.leading()), f);
}

void SkewRing::right_divmod(const SkewPoly& f, const SkewPoly& g, SkewPoly& quot,
                            SkewPoly& rem) const {
    if (g.is_zero()) throw std::domain_error("skew division by zero");
    const FiniteField& F = L();
    rem = f;
    trim(rem);
    const int dg = g.degree();
    quot.c.assign(rem.degree() >= dg ? rem.degree() - dg + 1 : 0, 0);
    while (rem.degree() >= dg) {
        const int shift = rem.degree() - dg;
        // (c x^shift)(g_dg x^dg) = c σ^shift(g_dg) x^{deg rem}
        const Elt c = F.mul(rem.leading(), F.inv(tw_->sigma(g.leading(), shift)));
        quot.c[shift] = c;
        for (int j = 0; j <= dg; ++j) {
            if (g.c[j] == 0) continue;
            Elt t = F.mul(c, tw_->sigma(g.c[j], shift));
            rem.c[shift + j] = F.sub(rem.c[shift + j], t);
        }
        trim(rem);
    }
    trim(quot);
}

SkewPoly SkewRing::right_mod(const SkewPoly& f, const SkewPoly& g) const {
    SkewPoly q, r;
    right_divmod(f, g, q, r);
    return r;
}

bool SkewRing::right_divides(const SkewPoly& g, const SkewPoly& f) const {
    return right_mod(f, g).is_zero();
}

SkewPoly SkewRing::gcrd_ext(const SkewPoly& f, const SkewPoly& g, SkewPoly& u,
                            SkewPoly& v) const {
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("gcrd of two zero polynomials");
    SkewPoly a = f, b = g;
    trim(a);
    trim(b);
    SkewPoly u0 = one(), v0 = zero(), u1 = zero(), v1 = one();
    while (!b.is_zero()) {
        SkewPoly q, r;
        right_divmod(a, b, q, r);
        // r = a - q·b, so the cofactor pair updates by left-multiplying with q.
        SkewPoly u2 = sub(u0, mul(q, u1));
        SkewPoly v2 = sub(v0, mul(q, v1));
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (a.leading() != L().one()) {
        Elt c = L().inv(a.leading());
        a = scale(c, a);
        u0 = scale(c, u0);
        v0 = scale(c, v0);
    }
    u = std::move(u0);
    v = std::move(v0);
    return a;
}

SkewPoly SkewRing::gcrd(const SkewPoly& f, const SkewPoly& g) const {
    SkewPoly u, v;
    return gcrd_ext(f, g, u, v);
}

SkewPoly SkewRing::lclm(const SkewPoly& f, const SkewPoly& g) const {
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("lclm of a zero polynomial");
    // Track only the f-cofactors u_i with r_i = u_i f + v_i g; when the
    // remainder reaches zero, u_k f is the lclm.
    SkewPoly a = f, b = g;
    trim(a);
    trim(b);
    SkewPoly u0 = one(), u1 = zero();
    while (!b.is_zero()) {
        SkewPoly q, r;
        right_divmod(a, b, q, r);
        SkewPoly u2 = sub(u0, mul(q, u1));
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return make_monic(mul(u1, f));
}

SkewPoly SkewRing::lclm_many(const std::vector<SkewPoly>& fs) const {
    if (fs.empty()) throw std::domain_error("lclm of an empty list");
    SkewPoly acc = make_monic(fs[0]);
    for (std::size_t i = 1; i < fs.size(); ++i) acc = lclm(acc, fs[i]);
    return acc;
}

SkewPoly SkewRing::shift_scale(const SkewPoly& f, Elt alpha) const {
    if (alpha == 0) throw std::domain_error("shift by zero");
    const FiniteField& F = L();
    SkewPoly r = f;
    Elt tn = F.one();  // N^i_σ(α), updated incrementally
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        r.c[i] = F.mul(r.c[i], tn);
        tn = F.mul(tn, tw_->sigma(alpha, static_cast<int>(i)));
    }
    trim(r);
    return r;
}

SkewPoly SkewRing::inflate(const poly::Poly& F_over_K) const {
    const int n = tw_->n();
    const Embedding& emb = tw_->embed(tw_->e(), tw_->n() * tw_->e());
    SkewPoly r;
    if (F_over_K.empty()) return r;
    r.c.assign(static_cast<std::size_t>(poly::degree(F_over_K)) * n + 1, 0);
    for (int i = 0; i <= poly::degree(F_over_K); ++i)
        r.c[static_cast<std::size_t>(i) * n] = emb.apply(F_over_K[i]);
    trim(r);
    return r;
}

bool SkewRing::is_central(const SkewPoly& f) const {
    const int n = tw_->n();
    const Embedding& emb = tw_->embed(tw_->e(), tw_->n() * tw_->e());
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.c[i] == 0) continue;
        if (i % n != 0) return false;
        if (!emb.in_image(f.c[i])) return false;
    }
    return true;
}

poly::Poly SkewRing::deflate(const SkewPoly& f) const {
    if (!is_central(f)) throw std::domain_error("deflate of a non-central element");
    const int n = tw_->n();
    const Embedding& emb = tw_->embed(tw_->e(), tw_->n() * tw_->e());
    poly::Poly r;
    if (f.is_zero()) return r;
    r.assign(static_cast<std::size_t>(f.degree() / n) + 1, 0);
    for (int i = 0; i <= f.degree(); i += n) r[i / n] = emb.pull_back(f.c[i]);
    return r;
}

poly::Poly SkewRing::bound_of(const SkewPoly& f) const {
    if (f.is_zero()) throw std::domain_error("bound of zero");
    if (f.degree() == 0) return {tw_->K().one()};
    if (f.constant_term() == 0)
        throw std::domain_error(
            "bound undefined for zero constant term (gcrd(f, x) != 1)");
    const FiniteField& FL = L();
    const FiniteField& FK = tw_->K();
    const int n = tw_->n();
    const int e = tw_->e();
    const int p = tw_->p();
    const Embedding& emb = tw_->embed(e, n * e);
    const int df = f.degree();
    const int maxD = n * df;
    const SkewPoly fm = make_monic(f);

    // Remainders r_i = x^{ni} mod_r f, computed incrementally.
    std::vector<SkewPoly> rems(static_cast<std::size_t>(maxD) + 1);
    rems[0] = one();
    const SkewPoly xn = monomial(n, FL.one());
    for (int i = 1; i <= maxD; ++i)
        rems[i] = right_mod(mul(rems[i - 1], xn), fm);

    // Images of the K power basis inside L: candidate coefficients c_i ∈ K are
    // c_i = Σ_m z_{i,m} w_m with z over F_p.
    std::vector<Elt> w(static_cast<std::size_t>(e));
    for (int m = 0; m < e; ++m) {
        std::vector<int> basis(e, 0);
        basis[m] = 1;
        w[m] = emb.apply(FK.from_coeffs(basis));
    }

    const int flat_len = df * n * e;  // F_p coordinates of a residue
    auto flatten = [&](const SkewPoly& r, Elt mult) {
        std::vector<int> out(flat_len, 0);
        for (int j = 0; j <= r.degree(); ++j) {
            Elt v = mult == FL.one() ? r.c[j] : FL.mul(mult, r.c[j]);
            std::vector<int> cc = FL.coeffs(v);
            for (int b = 0; b < n * e; ++b) out[j * n * e + b] = cc[b];
        }
        return out;
    };

    // Try degrees D = 1, 2, ... and solve the affine F_p system
    //   Σ_{i<D} Σ_m z_{i,m} flat(w_m r_i) = -flat(r_D).
    for (int D = 1; D <= maxD; ++D) {
        const int cols = D * e;
        std::vector<std::vector<int>> M(flat_len, std::vector<int>(cols + 1, 0));
        for (int i = 0; i < D; ++i)
            for (int m = 0; m < e; ++m) {
                std::vector<int> col = flatten(rems[i], w[m]);
                for (int r = 0; r < flat_len; ++r) M[r][i * e + m] = col[r];
            }
        std::vector<int> rhs = flatten(rems[D], FL.one());
        for (int r = 0; r < flat_len; ++r) M[r][cols] = (p - rhs[r]) % p;

        // Gaussian elimination over F_p.
        std::vector<int> pivot_col(flat_len, -1);
        int rank = 0;
        bool consistent = true;
        for (int c = 0; c < cols && rank < flat_len; ++c) {
            int pr = -1;
            for (int r = rank; r < flat_len; ++r)
                if (M[r][c] != 0) { pr = r; break; }
            if (pr < 0) continue;
            std::swap(M[rank], M[pr]);
            int lcinv = 1;
            for (int x = 1; x < p; ++x)
                if (x * M[rank][c] % p == 1) { lcinv = x; break; }
            for (int j = c; j <= cols; ++j) M[rank][j] = M[rank][j] * lcinv % p;
            for (int r = 0; r < flat_len; ++r) {
                if (r == rank || M[r][c] == 0) continue;
                int fct = M[r][c];
                for (int j = c; j <= cols; ++j)
                    M[r][j] = ((M[r][j] - fct * M[rank][j]) % p + p) % p;
            }
            pivot_col[rank] = c;
            ++rank;
        }
        for (int r = rank; r < flat_len; ++r)
            if (M[r][cols] != 0) { consistent = false; break; }
        if (!consistent) continue;

        std::vector<int> z(cols, 0);
        for (int r = 0; r < rank; ++r) z[pivot_col[r]] = M[r][cols];
        poly::Poly F(static_cast<std::size_t>(D) + 1, 0);
        F[D] = FK.one();
        for (int i = 0; i < D; ++i) {
            std::vector<int> kc(z.begin() + i * e, z.begin() + (i + 1) * e);
            F[i] = FK.from_coeffs(kc);
        }
        return F;
    }
    throw std::logic_error("bound not found below n*deg(f) (unreachable)");
}

SkewPoly SkewRing::irr_right_divisor(const poly::Poly& F_over_K,
                                     std::uint64_t seed) const {
    const FiniteField& FK = tw_->K();
    const FiniteField& FL = L();
    const int s = poly::degree(F_over_K);
    if (s < 1 || !poly::is_monic(FK, F_over_K))
        throw std::invalid_argument("bound polynomial must be monic of positive degree");
    if (F_over_K[0] == 0)
        throw std::invalid_argument("bound polynomial must differ from y");
    if (!poly::is_irreducible(FK, F_over_K))
        throw std::invalid_argument("bound polynomial must be irreducible");

    if (s == 1) {
        // F = y - λ: the canonical smallest u with N_{L/K}(u) = λ gives x - u.
        const Elt lambda = FK.neg(F_over_K[0]);
        for (std::uint64_t i = 0; i < FL.size(); ++i) {
            Elt u = FL.nth(i);
            if (u == 0) continue;
            if (tw_->norm_between(u, tw_->e(), tw_->n() * tw_->e()) == lambda) {
                SkewPoly f;
                f.c = {FL.neg(u), FL.one()};
                return f;
            }
        }
        throw std::logic_error("norm is surjective; unreachable");
    }

    const SkewPoly inflated = inflate(F_over_K);
    SkewPoly h = inflated;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> coeff(0, FL.size() - 1);
    const int budget = 20000;
    for (int iter = 0; iter < budget && h.degree() > s; ++iter) {
        SkewPoly a;
        a.c.assign(static_cast<std::size_t>(h.degree()), 0);
        for (Elt& x : a.c) x = static_cast<Elt>(coeff(rng));
        trim(a);
        if (a.is_zero()) continue;
        SkewPoly g = gcrd(a, h);
        if (g.degree() > 0 && g.degree() < h.degree()) h = g;
    }
    if (h.degree() != s)
        throw std::runtime_error(
            "irr_right_divisor search budget exhausted; retry with a new seed");
    h = make_monic(h);
    // Certificates: h right-divides F(x^n) and its bound is exactly F.
    if (!right_divides(h, inflated))
        throw std::logic_error("divisor certificate failed (unreachable)");
    if (bound_of(h) != F_over_K)
        throw std::logic_error("bound certificate failed (unreachable)");
    return h;
}

}  // namespace skewcode
