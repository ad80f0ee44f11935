#include "skewcode/invariants.hpp"

#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace skewcode {

namespace {

/// Row echelon form of a set of F_p vectors, for membership tests.
struct Rref {
    int p = 0;
    int ncols = 0;
    std::vector<std::vector<int>> rows;  // each with a leading 1 at pivots[i]
    std::vector<int> pivots;

    void insert(std::vector<int> v) {
        reduce(v);
        int piv = -1;
        for (int c = 0; c < ncols; ++c)
            if (v[static_cast<std::size_t>(c)] != 0) { piv = c; break; }
        if (piv < 0) return;
        // Normalize the leading coefficient to 1.
        int lead = v[static_cast<std::size_t>(piv)];
        int inv = 1;
        while (lead * inv % p != 1) ++inv;
        for (auto& x : v) x = x * inv % p;
        // Back-substitute into existing rows.
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int c = rows[r][static_cast<std::size_t>(piv)];
            if (c == 0) continue;
            for (int j = 0; j < ncols; ++j)
                rows[r][static_cast<std::size_t>(j)] =
                    ((rows[r][static_cast<std::size_t>(j)] -
                      c * v[static_cast<std::size_t>(j)]) % p + p) % p;
        }
        rows.push_back(std::move(v));
        pivots.push_back(piv);
    }

    void reduce(std::vector<int>& v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int c = v[static_cast<std::size_t>(pivots[r])];
            if (c == 0) continue;
            for (int j = 0; j < ncols; ++j)
                v[static_cast<std::size_t>(j)] =
                    ((v[static_cast<std::size_t>(j)] -
                      c * rows[r][static_cast<std::size_t>(j)]) % p + p) % p;
        }
    }

    bool contains(std::vector<int> v) const {
        reduce(v);
        for (int x : v)
            if (x != 0) return false;
        return true;
    }
};

Rref code_rref(const CodeHandle& code) {
    const QuotCtx& ctx = *code.params.ctx;
    Rref rr;
    rr.p = ctx.tower().p();
    rr.ncols = ctx.fp_dimension();
    for (const QuotElem& a : code.fp_basis) rr.insert(flatten(a));
    return rr;
}

/// Nullspace basis of the row system M x = 0 over F_p.
std::vector<std::vector<int>> nullspace(int p, int ncols,
                                        const std::vector<std::vector<int>>& m) {
    Rref rr;
    rr.p = p;
    rr.ncols = ncols;
    for (const auto& row : m) rr.insert(row);
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int c : rr.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<int> v(static_cast<std::size_t>(ncols), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < rr.rows.size(); ++r)
            v[static_cast<std::size_t>(rr.pivots[r])] =
                (p - rr.rows[r][static_cast<std::size_t>(free)]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

void require_sumrank(const CodeHandle& code) {
    if (code.params.family != Family::S && code.params.family != Family::D)
        throw std::invalid_argument("nuclear invariants need a sum-rank code");
}

bool known_family(FamilyTag f) {
    return f == FamilyTag::LRS || f == FamilyTag::ATLRS || f == FamilyTag::TZ;
}

/// gcd(m, x mod m) with gcd(m, 0) = m.
long long modgcd(long long m, long long x) {
    x %= m;
    if (x < 0) x += m;
    return x == 0 ? m : std::gcd(m, x);
}

}  // namespace

bool code_contains(const CodeHandle& code, const QuotElem& a) {
    require_sumrank(code);
    return code_rref(code).contains(flatten(a));
}

SubringResult subring_invariant(const CodeHandle& code, SubringKind kind) {
    require_sumrank(code);
    const QuotCtx& ctx = *code.params.ctx;
    const int p = ctx.tower().p();
    const int D = ctx.fp_dimension();
    Rref cb = code_rref(code);
    if ((kind == SubringKind::Cen || kind == SubringKind::Z) &&
        !cb.contains(flatten(q_one(ctx))))
        throw std::invalid_argument(
            "Cen/Z need 1 in the code; call normalize_unital first");

    std::vector<QuotElem> ambient;
    ambient.reserve(static_cast<std::size_t>(D));
    for (int j = 0; j < D; ++j) {
        std::vector<int> unit(static_cast<std::size_t>(D), 0);
        unit[static_cast<std::size_t>(j)] = 1;
        ambient.push_back(unflatten(ctx, unit));
    }

    // Constraint rows over the unknown g = Σ g_j e_j: one block per code
    // basis element, columns indexed by j.
    std::vector<std::vector<int>> constraints;
    auto add_block = [&](const std::vector<std::vector<int>>& cols) {
        for (int c = 0; c < D; ++c) {
            std::vector<int> row(static_cast<std::size_t>(D), 0);
            bool nz = false;
            for (int j = 0; j < D; ++j) {
                row[static_cast<std::size_t>(j)] =
                    cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
                nz = nz || row[static_cast<std::size_t>(j)] != 0;
            }
            if (nz) constraints.push_back(std::move(row));
        }
    };
    for (const QuotElem& a : code.fp_basis) {
        std::vector<std::vector<int>> left_cols, right_cols, cen_cols;
        for (int j = 0; j < D; ++j) {
            if (kind == SubringKind::Il || kind == SubringKind::Z) {
                std::vector<int> v = flatten(q_mul(ambient[static_cast<std::size_t>(j)], a));
                cb.reduce(v);  // residual mod C; zero iff membership
                left_cols.push_back(std::move(v));
            }
            if (kind == SubringKind::Ir) {
                std::vector<int> v = flatten(q_mul(a, ambient[static_cast<std::size_t>(j)]));
                cb.reduce(v);
                right_cols.push_back(std::move(v));
            }
            if (kind == SubringKind::Cen || kind == SubringKind::Z) {
                cen_cols.push_back(flatten(
                    q_sub(q_mul(ambient[static_cast<std::size_t>(j)], a),
                          q_mul(a, ambient[static_cast<std::size_t>(j)]))));
            }
        }
        if (!left_cols.empty()) add_block(left_cols);
        if (!right_cols.empty()) add_block(right_cols);
        if (!cen_cols.empty()) add_block(cen_cols);
    }

    SubringResult res;
    res.kind = kind;
    for (auto& v : nullspace(p, D, constraints)) {
        res.basis.push_back(unflatten(ctx, v));
    }
    res.dim_p = static_cast<int>(res.basis.size());
    return res;
}

CodeHandle normalize_unital(const CodeHandle& code, std::uint64_t budget,
                            std::uint64_t seed) {
    require_sumrank(code);
    const QuotCtx& ctx = *code.params.ctx;
    Rref cb = code_rref(code);
    if (cb.contains(flatten(q_one(ctx)))) return code;

    const int tn = code.max_weight;
    std::uint64_t card = 0;
    try {
        card = code_cardinality(code);
    } catch (const std::overflow_error&) {
        card = ~std::uint64_t{0};
    }
    QuotElem unit;
    bool found = false;
    for (std::uint64_t i = 1; i < card && i <= budget; ++i) {
        QuotElem w = codeword_sumrank(code, i);
        if (f_weight(w) == tn) {
            unit = w;
            found = true;
            break;
        }
    }
    if (!found && card - 1 > budget) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> pick(1, card - 1);
        for (std::uint64_t it = 0; it < budget && !found; ++it) {
            QuotElem w = codeword_sumrank(code, pick(rng));
            if (f_weight(w) == tn) {
                unit = w;
                found = true;
            }
        }
    }
    if (!found)
        throw std::runtime_error("no full-weight codeword within the budget");

    QuotElem u = invert_unit(unit);
    CodeHandle normalized = code;
    for (QuotElem& a : normalized.fp_basis) a = q_mul(a, u);
    return normalized;
}

std::array<long long, 5> closed_form_profile(const ProfileSpec& sp) {
    const long long e = sp.e, n = sp.n, s = sp.s, t = sp.t, k = sp.k, h = sp.h;
    switch (sp.family) {
        case FamilyTag::LRS:
            return {t * n * k * e * s, n * e * s, n * e * s, e * t * s, e * s};
        case FamilyTag::ATLRS:
            return {t * n * k * e * s, modgcd(n * e * s, h),
                    modgcd(n * e * s, k * e * s - h), e * t * s, modgcd(e * s, h)};
        case FamilyTag::TZ:
            if (n % 2 != 0) throw std::invalid_argument("TZ-type needs n even");
            return {t * n * k * e * s, n * e * s / 2, n * e * s / 2, e * t * s,
                    e * s};
        case FamilyTag::S:
            if (sp.twisted)
                return {n * k * e * s, modgcd(n * e, h),
                        modgcd(n * e, k * e * s - h), e * t * s, modgcd(e, h)};
            return {n * k * e * s, n * e, n * e, e * t * s, e};
        case FamilyTag::D:
            if (n % 2 != 0) throw std::invalid_argument("D needs n even");
            return {n * k * e * s, n * e / 2, n * e / 2, e * t * s, e};
    }
    throw std::logic_error("unknown family tag");
}

ProfileSpec profile_spec_of(const CodeParams& params) {
    if (params.family != Family::S && params.family != Family::D)
        throw std::invalid_argument("profile specs exist for the S/D families");
    const QuotCtx& ctx = *params.ctx;
    const TowerContext& tw = ctx.tower();
    ProfileSpec sp;
    sp.family = params.family == Family::S ? FamilyTag::S : FamilyTag::D;
    sp.p = tw.p();
    sp.e = tw.e();
    sp.n = tw.n();
    sp.s = ctx.s();
    sp.t = ctx.t();
    sp.k = params.k;
    if (params.family == Family::S && params.eta != 0) {
        sp.twisted = true;
        sp.h = params.rho.h % (tw.n() * tw.e());
    }
    return sp;
}

NuclearProfile nuclear_parameters(const CodeHandle& code) {
    require_sumrank(code);
    CodeHandle normalized = normalize_unital(code);
    SubringResult il = subring_invariant(code, SubringKind::Il);
    SubringResult ir = subring_invariant(code, SubringKind::Ir);
    SubringResult cen = subring_invariant(normalized, SubringKind::Cen);
    SubringResult z = subring_invariant(normalized, SubringKind::Z);

    NuclearProfile prof;
    prof.sizes_log_p = {static_cast<long long>(code.log_p_cardinality),
                        il.dim_p, ir.dim_p, cen.dim_p, z.dim_p};
    prof.il_basis = std::move(il.basis);
    prof.ir_basis = std::move(ir.basis);
    prof.cen_basis = std::move(cen.basis);
    prof.z_basis = std::move(z.basis);

    const QuotCtx& ctx = *code.params.ctx;
    const int tn = ctx.t() * ctx.n();
    const int ks = code.params.k * ctx.s();
    if (code.params.family == Family::S)
        prof.hypotheses_met = ks > 2 && 2 * code.params.k <= tn;
    else
        prof.hypotheses_met = ks >= 2 && 2 * code.params.k <= tn;
    prof.closed_form_match =
        prof.hypotheses_met &&
        prof.sizes_log_p == closed_form_profile(profile_spec_of(code.params));
    return prof;
}

NoveltyVerdict novelty_verdict(const ProfileSpec& a, const ProfileSpec& b) {
    if (a.p != b.p || a.e != b.e || a.n != b.n || a.s != b.s || a.t != b.t)
        throw std::invalid_argument("parameter points live in different ambients");
    const int n = a.n, s = a.s, e = a.e;

    if (a.family == b.family && a.k == b.k && a.twisted == b.twisted &&
        (!a.twisted || a.h == b.h))
        return {"same parameters", "identical parameter points"};

    // s = 1 folds the new families into the known ones.
    auto is_new = [](FamilyTag f) { return f == FamilyTag::S || f == FamilyTag::D; };
    if (s == 1 && ((is_new(a.family) && known_family(b.family)) ||
                   (is_new(b.family) && known_family(a.family))))
        return {"same family",
                "s = 1: S reduces to (AT)LRS and D to the TZ-type family"};

    // Arithmetic fast paths of the inequivalence theorems.
    auto fast = [&](const ProfileSpec& x, const ProfileSpec& y) -> const char* {
        if (!is_new(x.family) || !known_family(y.family)) return nullptr;
        if (x.family == FamilyTag::S && !x.twisted && std::gcd(n, s) > 1)
            return "gcd(n,s) > 1 separates untwisted S from every known family";
        if (x.family == FamilyTag::S && x.twisted && e % std::gcd(n, s) != 0)
            return "gcd(n,s) does not divide e: twisted S is new";
        if (x.family == FamilyTag::D && s >= 3 && std::gcd(n, s) > 1)
            return "s >= 3 and gcd(n,s) > 1: D is new";
        return nullptr;
    };
    if (const char* r = fast(a, b)) return {"provably inequivalent", r};
    if (const char* r = fast(b, a)) return {"provably inequivalent", r};
    if (((a.family == FamilyTag::S && b.family == FamilyTag::D) ||
         (a.family == FamilyTag::D && b.family == FamilyTag::S)) &&
        a.k == b.k && a.k > 1 && 2 * a.k <= a.t * n && s >= 3 &&
        (s * a.k) % n != 0)
        return {"provably inequivalent",
                "1 < k <= tn/2, s >= 3 and n does not divide sk: S and D differ"};

    // Generic profile comparison (entries 2..5; equivalent codes have equal
    // cardinality by definition, so |C| carries no distinguishing power
    // between families quoted at different parameter conventions).
    std::array<long long, 5> pa = closed_form_profile(a);
    std::array<long long, 5> pb = closed_form_profile(b);
    for (int i = 1; i < 5; ++i) {
        if (pa[static_cast<std::size_t>(i)] == pb[static_cast<std::size_t>(i)])
            continue;
        static const char* names[] = {"|C|", "|Il|", "|Ir|", "|Cen|", "|Z|"};
        std::ostringstream os;
        os << names[i] << " differs: p^" << pa[static_cast<std::size_t>(i)]
           << " vs p^" << pb[static_cast<std::size_t>(i)];
        return {"provably inequivalent", os.str()};
    }
    return {"inconclusive",
            "nuclear profiles agree; equivalence is not decided"};
}

}  // namespace skewcode
