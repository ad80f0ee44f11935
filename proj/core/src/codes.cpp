#include "skewcode/codes.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace skewcode {

namespace {

bool is_sumrank(Family f) { return f == Family::S || f == Family::D; }

const TowerContext& tower_of(const CodeParams& p) {
    if (is_sumrank(p.family)) {
        if (!p.ctx) throw std::invalid_argument("sum-rank family needs a QuotCtx");
        return p.ctx->tower();
    }
    if (!p.tower) throw std::invalid_argument("MDS family needs a TowerContext");
    if (p.tower->n() != 1)
        throw std::invalid_argument("MDS families use n = 1 semantics");
    if (p.s < 1) throw std::invalid_argument("MDS family needs s >= 1");
    return *p.tower;
}

// Walk all compositions j_1 + ... + j_t = k; the sink gets the composition
// and the product ∏ F_{i,0}^{j_i} ∈ K, and returns false to abort the walk.
template <typename Sink>
bool walk_compositions(const FiniteField& K, const std::vector<poly::Poly>& polys,
                       int k, Sink&& sink) {
    const int t = static_cast<int>(polys.size());
    std::vector<int> j(static_cast<std::size_t>(t), 0);
    auto rec = [&](auto&& self, int pos, int left, Elt prod) -> bool {
        if (pos == t - 1) {
            j[static_cast<std::size_t>(pos)] = left;
            Elt full = K.mul(prod, K.pow(polys[static_cast<std::size_t>(pos)][0],
                                         static_cast<std::uint64_t>(left)));
            return sink(j, full);
        }
        for (int v = 0; v <= left; ++v) {
            j[static_cast<std::size_t>(pos)] = v;
            Elt next = K.mul(prod, K.pow(polys[static_cast<std::size_t>(pos)][0],
                                         static_cast<std::uint64_t>(v)));
            if (!self(self, pos + 1, left - v, next)) return false;
        }
        return true;
    };
    return rec(rec, 0, k, K.one());
}

Elt sign_pow(const FiniteField& F, long long exponent) {
    return exponent % 2 == 0 ? F.one() : F.neg(F.one());
}

int kprime_degree_of(const CodeParams& p, const TowerContext& tw) {
    switch (p.family) {
        case Family::S: {
            const int ne = tw.n() * tw.e();
            return p.rho.h == 0 ? tw.e()
                                : std::gcd(tw.e(), std::gcd(ne, p.rho.h));
        }
        case Family::D:
            return std::gcd(tw.n() * tw.e() / 2, tw.e());
        case Family::MDS_S:
            return p.rho.h == 0 ? tw.e() : std::gcd(tw.e(), p.rho.h);
        case Family::MDS_D:
            return tw.e() / 2;
    }
    throw std::logic_error("unknown family");
}

}  // namespace

TwistVerdict check_twist_condition(const CodeParams& params) {
    const TowerContext& tw = tower_of(params);
    const FiniteField& K = tw.K();
    TwistVerdict v;
    switch (params.family) {
        case Family::S: {
            const QuotCtx& ctx = *params.ctx;
            const int eprime = kprime_degree_of(params, tw);
            const FiniteField& Kp = tw.field_of_degree(eprime);
            const Elt sign = sign_pow(
                K, static_cast<long long>(ctx.s()) * params.k * (tw.n() - 1));
            const Elt neta =
                params.eta == 0
                    ? 0
                    : tw.norm_between(params.eta, eprime, tw.n() * tw.e());
            v.ok = walk_compositions(
                K, ctx.tuple().polys, params.k,
                [&](const std::vector<int>& j, Elt prod) {
                    Elt nv = tw.norm_between(K.mul(sign, prod), eprime, tw.e());
                    if (Kp.mul(neta, nv) != Kp.one()) return true;
                    v.violating_composition = j;
                    v.detail = "N(eta)*N((-1)^{sk(n-1)} prod F_{i,0}^{j_i}) = 1";
                    return false;
                });
            if (v.ok) v.detail = params.eta == 0 ? "eta = 0 (vacuous)" : "all compositions pass";
            return v;
        }
        case Family::D: {
            const QuotCtx& ctx = *params.ctx;
            if (params.gamma == 0) {
                v.detail = "gamma must be nonzero";
                return v;
            }
            const Elt ngamma = tw.norm_between(params.gamma, tw.e(), tw.n() * tw.e());
            const Elt sign = sign_pow(
                K, static_cast<long long>(ctx.s()) * params.k * (tw.n() - 1));
            v.ok = walk_compositions(
                K, ctx.tuple().polys, params.k,
                [&](const std::vector<int>& j, Elt prod) {
                    Elt w = K.mul(K.mul(sign, prod), ngamma);
                    if (!tw.is_square(K, w).is_square) return true;
                    v.violating_composition = j;
                    v.detail = "(-1)^{sk(n-1)} (prod F_{i,0}^{j_i}) N(gamma) is a square";
                    return false;
                });
            if (v.ok) v.detail = "all compositions give non-squares";
            return v;
        }
        case Family::MDS_S: {
            const int e0 = kprime_degree_of(params, tw);
            const FiniteField& K0 = tw.field_of_degree(e0);
            std::uint64_t q0 = 1;
            for (int i = 0; i < e0; ++i) q0 *= static_cast<std::uint64_t>(tw.p());
            if (q0 != params.subgroup.q0 || params.subgroup.order == 0 ||
                (q0 - 1) % params.subgroup.order != 0)
                throw std::invalid_argument("subgroup does not match the fixed field of rho");
            const int r = tw.e() / e0;
            const Elt neta = params.eta == 0
                                 ? 0
                                 : tw.norm_between(params.eta, e0, tw.e());
            // η in the coset (-1)^{skr} T iff (-1)^{skr} N(η) lies in T.
            const Elt probe = K0.mul(
                sign_pow(K0, static_cast<long long>(params.s) * params.k * r), neta);
            const bool in_coset =
                probe != 0 && K0.pow(probe, params.subgroup.order) == K0.one();
            v.ok = !in_coset;
            v.detail = v.ok ? "N(eta) outside the forbidden coset"
                            : "N(eta) in (-1)^{skr} T";
            return v;
        }
        case Family::MDS_D: {
            if (tw.e() % 2 != 0 || tw.p() == 2)
                throw std::invalid_argument("MDS_D requires q an odd square");
            if (params.gamma == 0) {
                v.detail = "gamma must be nonzero";
                return v;
            }
            Elt probe = K.mul(
                sign_pow(K, static_cast<long long>(params.s) * params.k), params.gamma);
            v.ok = !tw.is_square(K, probe).is_square;
            v.detail = v.ok ? "gamma outside (-1)^{sk} T" : "gamma in (-1)^{sk} T";
            return v;
        }
    }
    throw std::logic_error("unknown family");
}

std::optional<Elt> find_twist(const CodeParams& params) {
    const TowerContext& tw = tower_of(params);
    const FiniteField& field =
        is_sumrank(params.family) ? tw.L() : tw.K();
    CodeParams probe = params;
    for (std::uint64_t i = 1; i < field.size(); ++i) {
        Elt cand = field.nth(i);
        if (params.family == Family::S || params.family == Family::MDS_S)
            probe.eta = cand;
        else
            probe.gamma = cand;
        if (check_twist_condition(probe).ok) return cand;
    }
    return std::nullopt;
}

CodeHandle build_code(const CodeParams& params) {
    const TowerContext& tw = tower_of(params);
    const FiniteField& K = tw.K();
    CodeHandle code;
    code.params = params;
    code.kprime_degree = kprime_degree_of(params, tw);

    if (is_sumrank(params.family)) {
        const QuotCtx& ctx = *params.ctx;
        const int tn = ctx.t() * ctx.n();
        const int sk = ctx.s() * params.k;
        if (params.k < 1 || params.k >= tn)
            throw std::invalid_argument("k must satisfy 1 <= k < tn");
        code.length = ctx.t();
        code.max_weight = tn;
        code.log_p_cardinality = tw.e() * tw.n() * sk;
        const FiniteField& L = tw.L();
        const int ne = tw.n() * tw.e();

        if (params.family == Family::S) {
            for (int i = 0; i < sk; ++i)
                for (int b = 0; b < ne; ++b) {
                    std::vector<int> cc(static_cast<std::size_t>(ne), 0);
                    cc[static_cast<std::size_t>(b)] = 1;
                    Elt a = L.from_coeffs(cc);
                    SkewPoly w;
                    w.c.assign(static_cast<std::size_t>(sk) + 1, 0);
                    w.c[static_cast<std::size_t>(i)] = a;
                    if (i == 0 && params.eta != 0)
                        w.c[static_cast<std::size_t>(sk)] =
                            L.mul(params.eta, tw.frobenius_apply(a, 1, params.rho));
                    code.fp_basis.push_back(reduce_mod(w, ctx));
                }
        } else {
            if (tw.n() % 2 != 0)
                throw std::invalid_argument("D family requires n even");
            if (tw.p() == 2)
                throw std::invalid_argument("D family requires q odd");
            if (params.gamma == 0)
                throw std::invalid_argument("D family requires gamma nonzero");
            const int half = ne / 2;
            const FiniteField& Lp = tw.field_of_degree(half);
            const Embedding& emb = tw.embed(half, ne);
            auto half_basis = [&](int b) {
                std::vector<int> cc(static_cast<std::size_t>(half), 0);
                cc[static_cast<std::size_t>(b)] = 1;
                return emb.apply(Lp.from_coeffs(cc));
            };
            for (int b = 0; b < half; ++b) {  // a_0' ∈ L'
                SkewPoly w{{half_basis(b)}};
                code.fp_basis.push_back(reduce_mod(w, ctx));
            }
            for (int i = 1; i < sk; ++i)  // a_i ∈ L
                for (int b = 0; b < ne; ++b) {
                    std::vector<int> cc(static_cast<std::size_t>(ne), 0);
                    cc[static_cast<std::size_t>(b)] = 1;
                    SkewPoly w;
                    w.c.assign(static_cast<std::size_t>(i) + 1, 0);
                    w.c[static_cast<std::size_t>(i)] = L.from_coeffs(cc);
                    code.fp_basis.push_back(reduce_mod(w, ctx));
                }
            for (int b = 0; b < half; ++b) {  // γ a_0'' x^{sk}
                SkewPoly w;
                w.c.assign(static_cast<std::size_t>(sk) + 1, 0);
                w.c[static_cast<std::size_t>(sk)] = L.mul(params.gamma, half_basis(b));
                code.fp_basis.push_back(reduce_mod(w, ctx));
            }
        }
        if (static_cast<int>(code.fp_basis.size()) != code.log_p_cardinality)
            throw std::logic_error("basis size disagrees with the cardinality law");
        code.condition = check_twist_condition(params);
        return code;
    }

    // MDS families.
    const int sk = params.s * params.k;
    const Embedding& embKE = tw.embed(tw.e(), tw.e() * params.s);
    if (params.family == Family::MDS_S) {
        code.eval_points = eval_set_A(tw, params.s, params.subgroup);
    } else {
        code.eval_points = eval_set_B(tw, params.s);
    }
    code.length = static_cast<int>(code.eval_points.size());
    code.max_weight = code.length;
    if (params.k < 1 || params.k >= code.length)
        throw std::invalid_argument("k must satisfy 1 <= k < |eval points|");
    code.log_p_cardinality = tw.e() * sk;

    auto push_eval = [&](const poly::Poly& a) {
        std::vector<Elt> row;
        row.reserve(code.eval_points.size());
        for (Elt pt : code.eval_points)
            row.push_back(poly::evaluate_embedded(embKE, a, pt));
        code.fp_basis_eval.push_back(std::move(row));
    };

    if (params.family == Family::MDS_S) {
        for (int i = 0; i < sk; ++i)
            for (int b = 0; b < tw.e(); ++b) {
                std::vector<int> cc(static_cast<std::size_t>(tw.e()), 0);
                cc[static_cast<std::size_t>(b)] = 1;
                Elt a = K.from_coeffs(cc);
                poly::Poly w(static_cast<std::size_t>(sk) + 1, 0);
                w[static_cast<std::size_t>(i)] = a;
                if (i == 0 && params.eta != 0)
                    w[static_cast<std::size_t>(sk)] = K.mul(
                        params.eta,
                        K.frob(a, static_cast<std::uint64_t>(params.rho.h)));
                poly::trim(K, w);
                push_eval(w);
            }
    } else {
        if (params.gamma == 0)
            throw std::invalid_argument("MDS_D requires gamma nonzero");
        const int e0 = tw.e() / 2;
        const FiniteField& K0 = tw.field_of_degree(e0);
        const Embedding& emb0 = tw.embed(e0, tw.e());
        auto sub_basis = [&](int b) {
            std::vector<int> cc(static_cast<std::size_t>(e0), 0);
            cc[static_cast<std::size_t>(b)] = 1;
            return emb0.apply(K0.from_coeffs(cc));
        };
        for (int b = 0; b < e0; ++b) {  // a_0 ∈ F_{q0}
            poly::Poly w{sub_basis(b)};
            push_eval(w);
        }
        for (int i = 1; i < sk; ++i)
            for (int b = 0; b < tw.e(); ++b) {
                std::vector<int> cc(static_cast<std::size_t>(tw.e()), 0);
                cc[static_cast<std::size_t>(b)] = 1;
                poly::Poly w(static_cast<std::size_t>(i) + 1, 0);
                w[static_cast<std::size_t>(i)] = K.from_coeffs(cc);
                push_eval(w);
            }
        for (int b = 0; b < e0; ++b) {  // a_{sk} = γ · F_{q0}
            poly::Poly w(static_cast<std::size_t>(sk) + 1, 0);
            w[static_cast<std::size_t>(sk)] = K.mul(params.gamma, sub_basis(b));
            push_eval(w);
        }
    }
    if (static_cast<int>(code.fp_basis_eval.size()) != code.log_p_cardinality)
        throw std::logic_error("basis size disagrees with the cardinality law");
    code.condition = check_twist_condition(params);
    return code;
}

std::uint64_t code_cardinality(const CodeHandle& code) {
    const int p = tower_of(code.params).p();
    std::uint64_t c = 1;
    for (int i = 0; i < code.log_p_cardinality; ++i) {
        if (c > (std::uint64_t{1} << 63) / static_cast<std::uint64_t>(p))
            throw std::overflow_error("code cardinality exceeds 2^63");
        c *= static_cast<std::uint64_t>(p);
    }
    return c;
}

QuotElem codeword_sumrank(const CodeHandle& code, std::uint64_t index) {
    if (!is_sumrank(code.params.family))
        throw std::invalid_argument("not a sum-rank family");
    const QuotCtx& ctx = *code.params.ctx;
    const int p = ctx.tower().p();
    QuotElem acc = q_zero(ctx);
    for (const QuotElem& b : code.fp_basis) {
        int digit = static_cast<int>(index % static_cast<std::uint64_t>(p));
        index /= static_cast<std::uint64_t>(p);
        if (digit != 0)
            acc = q_add(acc, QuotElem{&ctx, ctx.ring().scale(static_cast<Elt>(digit), b.rep)});
    }
    return acc;
}

std::vector<Elt> codeword_mds(const CodeHandle& code, std::uint64_t index) {
    if (is_sumrank(code.params.family))
        throw std::invalid_argument("not an MDS family");
    const TowerContext& tw = *code.params.tower;
    const FiniteField& E = tw.field_of_degree(tw.e() * code.params.s);
    const int p = tw.p();
    std::vector<Elt> acc(code.eval_points.size(), 0);
    for (const auto& row : code.fp_basis_eval) {
        int digit = static_cast<int>(index % static_cast<std::uint64_t>(p));
        index /= static_cast<std::uint64_t>(p);
        if (digit != 0)
            for (std::size_t j = 0; j < acc.size(); ++j)
                acc[j] = E.add(acc[j], E.scalar_mul(digit, row[j]));
    }
    return acc;
}

namespace {

int codeword_weight(const CodeHandle& code, std::uint64_t index) {
    if (is_sumrank(code.params.family)) return f_weight(codeword_sumrank(code, index));
    int w = 0;
    for (Elt x : codeword_mds(code, index))
        if (x != 0) ++w;
    return w;
}

// Scan [lo, hi); early exit once weight 1 is found (nothing can be lower).
void scan_range(const CodeHandle& code, std::uint64_t lo, std::uint64_t hi,
                int& best_w, std::uint64_t& best_idx) {
    best_w = code.max_weight + 1;
    best_idx = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
        int w = codeword_weight(code, i);
        if (w < best_w) {
            best_w = w;
            best_idx = i;
            if (w <= 1) return;
        }
    }
}

}  // namespace

DistanceResult min_distance(const CodeHandle& code, std::uint64_t cap, int jobs) {
    if (jobs <= 0) {
        const char* env = std::getenv("SKEWCODE_JOBS");
        jobs = env ? std::max(1, std::atoi(env)) : 1;
    }
    DistanceResult res;
    bool overflow = false;
    std::uint64_t card = 0;
    try {
        card = code_cardinality(code);
    } catch (const std::overflow_error&) {
        overflow = true;
    }

    if (!overflow && card - 1 <= cap) {
        res.exact = true;
        res.examined = card - 1;
        const std::uint64_t total = card - 1;
        const int workers = static_cast<int>(
            std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs), total));
        if (workers <= 1) {
            scan_range(code, 1, card, res.d, res.argmin_index);
        } else {
            std::vector<int> ws(static_cast<std::size_t>(workers));
            std::vector<std::uint64_t> idxs(static_cast<std::size_t>(workers));
            std::vector<std::thread> pool;
            const std::uint64_t chunk = total / static_cast<std::uint64_t>(workers);
            for (int w = 0; w < workers; ++w) {
                std::uint64_t lo = 1 + chunk * static_cast<std::uint64_t>(w);
                std::uint64_t hi = w == workers - 1 ? card : lo + chunk;
                pool.emplace_back([&, w, lo, hi] {
                    scan_range(code, lo, hi, ws[static_cast<std::size_t>(w)],
                               idxs[static_cast<std::size_t>(w)]);
                });
            }
            for (auto& th : pool) th.join();
            res.d = code.max_weight + 1;
            for (int w = 0; w < workers; ++w) {
                if (ws[static_cast<std::size_t>(w)] < res.d ||
                    (ws[static_cast<std::size_t>(w)] == res.d &&
                     idxs[static_cast<std::size_t>(w)] < res.argmin_index)) {
                    res.d = ws[static_cast<std::size_t>(w)];
                    res.argmin_index = idxs[static_cast<std::size_t>(w)];
                }
            }
        }
        return res;
    }

    // Sampling fallback: seeded uniform digit vectors, upper bound only.
    res.exact = false;
    res.seed = 0x5EEDC0DEULL;
    res.examined = cap;
    std::mt19937_64 rng(res.seed);
    const int p = tower_of(code.params).p();
    res.d = code.max_weight + 1;
    std::uniform_int_distribution<int> digit(0, p - 1);
    for (std::uint64_t it = 0; it < cap; ++it) {
        // Draw a uniform digit vector; every index reached is a genuine
        // codeword, so the minimum stays a valid upper bound.
        std::uint64_t index = 0;
        std::uint64_t scale = 1;
        bool nonzero = false;
        for (int d = 0; d < code.log_p_cardinality && scale != 0; ++d) {
            int dg = digit(rng);
            nonzero = nonzero || dg != 0;
            index += scale * static_cast<std::uint64_t>(dg);
            scale = scale > (~std::uint64_t{0}) / static_cast<std::uint64_t>(p)
                        ? 0
                        : scale * static_cast<std::uint64_t>(p);
        }
        if (!nonzero) continue;
        int w = codeword_weight(code, index);
        if (w >= 1 && w < res.d) res.d = w;
    }
    return res;
}

OptimalityVerdict optimality_verdict(const CodeHandle& code,
                                     const DistanceResult& dist) {
    if (!dist.exact)
        throw std::invalid_argument("optimality verdict needs an exact distance");
    const TowerContext& tw = tower_of(code.params);
    OptimalityVerdict v;
    v.lhs_log_p = code.log_p_cardinality;
    if (is_sumrank(code.params.family)) {
        const QuotCtx& ctx = *code.params.ctx;
        v.kind = "MSRD";
        v.rhs_log_p = static_cast<long long>(tw.e()) * ctx.s() * ctx.n() *
                      (ctx.t() * ctx.n() - dist.d + 1);
    } else {
        v.kind = "MDS";
        v.rhs_log_p = static_cast<long long>(tw.e()) * code.params.s *
                      (code.length - dist.d + 1);
    }
    v.optimal = v.lhs_log_p == v.rhs_log_p;
    return v;
}

}  // namespace skewcode
