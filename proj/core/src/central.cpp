#include "skewcode/central.hpp"

#include <numeric>
#include <stdexcept>

#include "skewcode/skew.hpp"

namespace skewcode {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Degree over F_p of the subfield F_{q0} of K, validating q = q0^r.
int subfield_degree_of_q0(const TowerContext& tw, std::uint64_t q0) {
    for (int e0 = 1; e0 <= tw.e(); ++e0) {
        if (tw.e() % e0 != 0) continue;
        if (ipow(static_cast<std::uint64_t>(tw.p()), e0) == q0) return e0;
    }
    throw std::invalid_argument("q0 is not the size of a subfield of F_q");
}

// Enumerate monic degree-s polynomials over K in canonical order and invoke
// the sink; c_0 varies slowest (most significant) per the canonical order.
template <typename Sink>
void for_each_monic(const TowerContext& tw, int s, std::uint64_t cap, Sink&& sink) {
    const FiniteField& K = tw.K();
    std::uint64_t total = 1;
    for (int i = 0; i < s; ++i) {
        total *= K.size();
        if (total > cap)
            throw std::runtime_error("enumeration cap exceeded (q^s too large)");
    }
    for (std::uint64_t w = 0; w < total; ++w) {
        poly::Poly F(static_cast<std::size_t>(s) + 1, 0);
        F[s] = K.one();
        std::uint64_t t = w;
        for (int i = s - 1; i >= 0; --i) {
            F[i] = K.nth(t % K.size());
            t /= K.size();
        }
        sink(F);
    }
}

}  // namespace

int mobius(int n) {
    int result = 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::int64_t count_Xs(std::uint64_t q, int s) {
    if (s < 1) throw std::invalid_argument("s must be positive");
    std::int64_t sum = 0;
    for (int d = 1; d <= s; ++d) {
        if (s % d != 0) continue;
        sum += mobius(s / d) * static_cast<std::int64_t>(ipow(q, d));
    }
    return sum / s;
}

std::int64_t count_XTs(std::uint64_t q, int s, const SubgroupSpec& T) {
    if (s < 1) throw std::invalid_argument("s must be positive");
    if (T.q0 < 2 || T.order == 0 || (T.q0 - 1) % T.order != 0)
        throw std::invalid_argument("subgroup order must divide q0 - 1");
    // Validate q = q0^r.
    std::uint64_t pw = T.q0;
    int r = 1;
    while (pw < q) {
        pw *= T.q0;
        ++r;
    }
    if (pw != q) throw std::invalid_argument("q is not a power of q0");
    const std::uint64_t index = (T.q0 - 1) / T.order;  // [F_{q0}^* : T]
    std::int64_t sum = 0;
    for (int d = 1; d <= s; ++d) {
        if (s % d != 0) continue;
        sum += mobius(s / d) * static_cast<std::int64_t>(ipow(q, d) - 1) *
               static_cast<std::int64_t>(std::gcd<std::uint64_t>(s / d, index));
    }
    // sum is divisible by s (q0 - 1) / |T|; divide in the order that keeps
    // intermediate values integral.
    return sum * static_cast<std::int64_t>(T.order) /
           (static_cast<std::int64_t>(s) * static_cast<std::int64_t>(T.q0 - 1));
}

SubgroupSpec squares_subgroup(std::uint64_t q) {
    if (q % 2 == 0) throw std::invalid_argument("squares subgroup needs odd q");
    return SubgroupSpec{q, (q - 1) / 2};
}

std::int64_t count_maxD(std::uint64_t q, int s) {
    return count_XTs(q, s, squares_subgroup(q));
}

bool is_irreducible_over_K(const TowerContext& tw, const poly::Poly& F) {
    return poly::is_irreducible(tw.K(), F);
}

std::vector<poly::Poly> enumerate_Xs(const TowerContext& tw, int s, std::uint64_t cap) {
    std::vector<poly::Poly> out;
    for_each_monic(tw, s, cap, [&](const poly::Poly& F) {
        if (poly::is_irreducible(tw.K(), F)) out.push_back(F);
    });
    return out;
}

std::vector<poly::Poly> enumerate_XTs(const TowerContext& tw, int s,
                                      const SubgroupSpec& T, std::uint64_t cap) {
    const FiniteField& K = tw.K();
    const int e0 = subfield_degree_of_q0(tw, T.q0);
    const FiniteField& K0 = tw.field_of_degree(e0);
    if (T.order == 0 || (K0.size() - 1) % T.order != 0)
        throw std::invalid_argument("subgroup order must divide q0 - 1");
    const Elt minus_one_pow_s = s % 2 == 0 ? K.one() : K.neg(K.one());
    std::vector<poly::Poly> out;
    for_each_monic(tw, s, cap, [&](const poly::Poly& F) {
        if (F[0] == 0) return;  // norm condition already fails (0 ∉ T)
        Elt v = K.mul(minus_one_pow_s, F[0]);
        Elt nv = tw.norm_between(v, e0, tw.e());
        if (nv == 0 || K0.pow(nv, T.order) != K0.one()) return;
        if (poly::is_irreducible(K, F)) out.push_back(F);
    });
    return out;
}

std::vector<poly::Poly> enumerate_ZTs(const TowerContext& tw, int s, std::uint64_t cap) {
    return enumerate_XTs(tw, s, squares_subgroup(tw.q()), cap);
}

AdmissibleTuple make_tuple(const TowerContext& tw, const poly::Poly& F,
                           const std::vector<Elt>& lambdas) {
    const FiniteField& K = tw.K();
    const int s = poly::degree(F);
    if (s < 1 || !poly::is_monic(K, F) || F[0] == 0 ||
        !poly::is_irreducible(K, F))
        throw std::invalid_argument(
            "base polynomial must be monic irreducible and different from y");
    if (lambdas.empty()) throw std::invalid_argument("empty lambda list");
    std::vector<Elt> powers;
    for (Elt l : lambdas) {
        if (l == 0) throw std::invalid_argument("lambda must be nonzero");
        Elt ls = K.pow(l, static_cast<std::uint64_t>(s));
        for (Elt prev : powers)
            if (prev == ls)
                throw std::invalid_argument("lambda_i^s values must be pairwise distinct");
        powers.push_back(ls);
    }
    AdmissibleTuple tuple;
    for (Elt l : lambdas) tuple.polys.push_back(poly::lambda_scale(K, F, l));
    tuple.H = {K.one()};
    for (const auto& Fi : tuple.polys) tuple.H = poly::mul(K, tuple.H, Fi);
    tuple.base = F;
    tuple.lambdas = lambdas;
    return tuple;
}

AdmissibleTuple tuple_from_polys(const TowerContext& tw,
                                 std::vector<poly::Poly> polys) {
    AdmissibleTuple tuple;
    tuple.polys = std::move(polys);
    tuple.H = {tw.K().one()};
    for (const auto& Fi : tuple.polys) tuple.H = poly::mul(tw.K(), tuple.H, Fi);
    return tuple;
}

TupleCertificate validate_admissible(const TowerContext& tw,
                                     const AdmissibleTuple& tuple,
                                     bool check_lclm) {
    const FiniteField& K = tw.K();
    TupleCertificate cert;
    if (tuple.polys.empty()) {
        cert.reason = "empty tuple";
        return cert;
    }
    const int s = poly::degree(tuple.polys[0]);
    for (int i = 0; i < tuple.t(); ++i) {
        const poly::Poly& Fi = tuple.polys[i];
        if (poly::degree(Fi) != s || !poly::is_monic(K, Fi)) {
            cert.failing_index = i;
            cert.reason = "not monic of the common degree";
            return cert;
        }
        if (poly::degree(Fi) < 1 || Fi[0] == 0) {
            cert.failing_index = i;
            cert.reason = "zero constant coefficient (F_i = y excluded)";
            return cert;
        }
        if (!poly::is_irreducible(K, Fi)) {
            cert.failing_index = i;
            cert.reason = "reducible component";
            return cert;
        }
        for (int j = 0; j < i; ++j)
            if (tuple.polys[j] == Fi) {
                cert.failing_index = i;
                cert.reason = "duplicate component";
                return cert;
            }
    }
    poly::Poly H{K.one()};
    for (const auto& Fi : tuple.polys) H = poly::mul(K, H, Fi);
    if (H != tuple.H) {
        cert.reason = "stored product H does not match the components";
        return cert;
    }
    if (check_lclm) {
        SkewRing R(tw);
        std::vector<SkewPoly> inflated;
        inflated.reserve(tuple.polys.size());
        for (const auto& Fi : tuple.polys) inflated.push_back(R.inflate(Fi));
        if (R.lclm_many(inflated) != R.inflate(tuple.H)) {
            cert.reason = "lclm of inflations differs from H(x^n)";
            return cert;
        }
        cert.lclm_checked = true;
    }
    cert.valid = true;
    return cert;
}

namespace {

std::vector<Elt> roots_of_list(const TowerContext& tw,
                               const std::vector<poly::Poly>& polys, int s) {
    const FiniteField& E = tw.field_of_degree(tw.e() * s);
    const Embedding& emb = tw.embed(tw.e(), tw.e() * s);
    std::vector<Elt> out;
    out.reserve(polys.size());
    for (const auto& F : polys) {
        bool found = false;
        for (std::uint64_t i = 0; i < E.size() && !found; ++i) {
            Elt x = E.nth(i);
            if (poly::evaluate_embedded(emb, F, x) == 0) {
                out.push_back(x);
                found = true;
            }
        }
        if (!found) throw std::logic_error("irreducible of degree s has no root in F_{q^s}");
    }
    return out;
}

}  // namespace

std::vector<Elt> eval_set_A(const TowerContext& tw, int s, const SubgroupSpec& T,
                            std::uint64_t cap) {
    return roots_of_list(tw, enumerate_XTs(tw, s, T, cap), s);
}

std::vector<Elt> eval_set_B(const TowerContext& tw, int s, std::uint64_t cap) {
    // Precondition of the D-family: q = q0^2 and q odd.
    if (tw.e() % 2 != 0)
        throw std::invalid_argument("eval_set_B requires q to be a square");
    if (tw.p() == 2) throw std::invalid_argument("eval_set_B requires odd q");
    return roots_of_list(tw, enumerate_ZTs(tw, s, cap), s);
}

}  // namespace skewcode
