#include <algorithm>
#include <set>

#include "doctest.h"
#include "skewcode/codes.hpp"

using namespace skewcode;

namespace {

/// q = 3, n = 2, s = 1, t = 2: F = y + 2, lambdas (1, 2).
struct SmallLrs {
    TowerContext tw{FieldSpec{3, 1, 2, 1}};
    QuotCtx ctx{tw, make_tuple(tw, {2, 1}, {1, 2})};
};

CodeParams s_params(const QuotCtx& ctx, int k, Elt eta = 0, AutSpec rho = {0}) {
    CodeParams p;
    p.family = Family::S;
    p.ctx = &ctx;
    p.k = k;
    p.eta = eta;
    p.rho = rho;
    return p;
}

CodeParams d_params(const QuotCtx& ctx, int k, Elt gamma) {
    CodeParams p;
    p.family = Family::D;
    p.ctx = &ctx;
    p.k = k;
    p.gamma = gamma;
    return p;
}

void check_msrd(const QuotCtx& ctx, const CodeParams& params) {
    CodeHandle code = build_code(params);
    CHECK(code.condition.ok);
    DistanceResult md = min_distance(code);
    REQUIRE(md.exact);
    const int tn = ctx.t() * ctx.n();
    CHECK(md.d == tn - params.k + 1);
    OptimalityVerdict v = optimality_verdict(code, md);
    CHECK(v.kind == "MSRD");
    CHECK(v.optimal);
    // The argmin really attains the distance.
    CHECK(f_weight(codeword_sumrank(code, md.argmin_index)) == md.d);
}

void check_mds(const CodeParams& params, int expected_d) {
    CodeHandle code = build_code(params);
    CHECK(code.condition.ok);
    DistanceResult md = min_distance(code);
    REQUIRE(md.exact);
    CHECK(md.d == expected_d);
    OptimalityVerdict v = optimality_verdict(code, md);
    CHECK(v.kind == "MDS");
    CHECK(v.optimal);
    std::vector<Elt> w = codeword_mds(code, md.argmin_index);
    CHECK(std::count_if(w.begin(), w.end(), [](Elt x) { return x != 0; }) == md.d);
}

}  // namespace

TEST_CASE("S family: basis, cardinality, indexing") {
    SmallLrs f;
    CodeHandle code = build_code(s_params(f.ctx, 2));
    CHECK(code.log_p_cardinality == 4);  // q^{nsk} = 9^2 = 3^4
    CHECK(code.fp_basis.size() == 4);
    CHECK(code.length == 2);
    CHECK(code.max_weight == 4);
    CHECK(code.kprime_degree == 1);
    CHECK(code_cardinality(code) == 81);
    CHECK(codeword_sumrank(code, 0) == q_zero(f.ctx));
    // Untwisted codewords are exactly the classes of degree < sk, pairwise
    // distinct.
    std::set<std::vector<int>> seen;
    for (std::uint64_t i = 0; i < 81; ++i) {
        QuotElem c = codeword_sumrank(code, i);
        CHECK(c.rep.degree() < 2);
        seen.insert(flatten(c));
    }
    CHECK(seen.size() == 81);
}

TEST_CASE("S family: MSRD across the untwisted grid") {
    SUBCASE("q=3 n=2 s=1 t=2") {
        SmallLrs f;
        for (int k = 1; k <= 3; ++k) check_msrd(f.ctx, s_params(f.ctx, k));
    }
    SUBCASE("q=3 n=1 s=2 t=3") {
        TowerContext tw{FieldSpec{3, 1, 1, 2}};
        QuotCtx ctx{tw, tuple_from_polys(tw, enumerate_Xs(tw, 2))};
        for (int k = 1; k <= 2; ++k) check_msrd(ctx, s_params(ctx, k));
    }
    SUBCASE("q=5 n=1 s=1 t=4") {
        TowerContext tw{FieldSpec{5, 1, 1, 1}};
        QuotCtx ctx{tw, make_tuple(tw, {4, 1}, {1, 2, 3, 4})};
        for (int k = 1; k <= 3; ++k) check_msrd(ctx, s_params(ctx, k));
    }
    SUBCASE("q=3 n=2 s=2 t=2") {
        TowerContext tw{FieldSpec{3, 1, 2, 2}};
        QuotCtx ctx{tw, tuple_from_polys(tw, {{1, 0, 1}, {2, 1, 1}})};
        for (int k = 1; k <= 2; ++k) check_msrd(ctx, s_params(ctx, k));
    }
}

TEST_CASE("S family: twisted codes") {
    SUBCASE("q=5 n=2 s=2 t=2: a twist exists and stays MSRD") {
        TowerContext tw{FieldSpec{5, 1, 2, 2}};
        QuotCtx ctx{tw, make_tuple(tw, {2, 0, 1}, {1, 2})};
        CodeParams p = s_params(ctx, 1);
        std::optional<Elt> eta = find_twist(p);
        REQUIRE(eta.has_value());
        CHECK(*eta != 0);
        // Minimality in the canonical element order.
        const FiniteField& L = tw.L();
        for (std::uint64_t i = 1; L.nth(i) != *eta; ++i) {
            CodeParams bad = p;
            bad.eta = L.nth(i);
            CHECK_FALSE(check_twist_condition(bad).ok);
        }
        p.eta = *eta;
        check_msrd(ctx, p);
        CodeHandle code = build_code(p);
        CHECK(code_cardinality(code) == 625);  // q^{nsk} = 5^4
        // A twisted codeword with a_0 != 0 carries the twist at x^{sk}.
        QuotElem basis0 = code.fp_basis[0];
        CHECK(basis0.rep.degree() == ctx.s() * p.k);
    }
    SUBCASE("q=3 n=2 s=1 t=2: no twist can pass") {
        SmallLrs f;
        for (int k = 1; k <= 2; ++k) {
            CHECK_FALSE(find_twist(s_params(f.ctx, k)).has_value());
        }
    }
}

TEST_CASE("D family: construction and MSRD") {
    SUBCASE("q=3 n=2 s=2 t=1") {
        TowerContext tw{FieldSpec{3, 1, 2, 2}};
        QuotCtx ctx{tw, tuple_from_polys(tw, {{1, 0, 1}})};
        CodeParams p = d_params(ctx, 1, 0);
        std::optional<Elt> gamma = find_twist(p);
        REQUIRE(gamma.has_value());
        // The condition is exactly "N_{L/K}(gamma) a non-square in F_3".
        CHECK(tw.norm_between(*gamma, 1, 2) == 2);
        p.gamma = *gamma;
        CodeHandle code = build_code(p);
        CHECK(code.log_p_cardinality == 4);  // q^{nsk} = 3^4
        CHECK(code.kprime_degree == 1);
        check_msrd(ctx, p);
    }
    SUBCASE("q=5 n=2 s=1 t=2") {
        TowerContext tw{FieldSpec{5, 1, 2, 1}};
        QuotCtx ctx{tw, tuple_from_polys(tw, {{1, 1}, {4, 1}})};
        CodeParams p = d_params(ctx, 2, 0);
        std::optional<Elt> gamma = find_twist(p);
        REQUIRE(gamma.has_value());
        p.gamma = *gamma;
        CodeHandle code = build_code(p);
        CHECK(code_cardinality(code) == 625);  // q^{nsk} = 5^4
        check_msrd(ctx, p);
    }
    SUBCASE("q=3 n=2 s=1 t=2: constant-term ratio blocks every gamma") {
        SmallLrs f;
        for (int k = 1; k <= 2; ++k) {
            CHECK_FALSE(find_twist(d_params(f.ctx, k, 0)).has_value());
        }
    }
    SUBCASE("parameter validation") {
        TowerContext tw{FieldSpec{3, 1, 1, 2}};
        QuotCtx ctx{tw, tuple_from_polys(tw, enumerate_Xs(tw, 2))};
        CHECK_THROWS_AS(build_code(d_params(ctx, 1, 1)),
                        std::invalid_argument);  // n odd
        SmallLrs f;
        CHECK_THROWS_AS(build_code(d_params(f.ctx, 1, 0)),
                        std::invalid_argument);  // gamma = 0
    }
}

TEST_CASE("MDS_S: lengths, distances, twists") {
    TowerContext tw{FieldSpec{3, 1, 1, 3}};
    const SubgroupSpec T_full{3, 2};
    const SubgroupSpec T_triv{3, 1};
    CodeParams base;
    base.family = Family::MDS_S;
    base.tower = &tw;
    base.s = 3;

    SUBCASE("full group: length 8, d = 9 - k, only eta = 0") {
        base.subgroup = T_full;
        for (int k = 1; k <= 4; ++k) {
            base.k = k;
            CHECK_FALSE(find_twist(base).has_value());
            CodeHandle code = build_code(base);
            CHECK(code.length == count_XTs(3, 3, T_full));
            CHECK(code.length == 8);
            check_mds(base, 9 - k);
            CHECK(code.log_p_cardinality == 3 * k);
        }
    }
    SUBCASE("trivial group: length 4, d = 5 - k, twist (-1)^{k+1}") {
        base.subgroup = T_triv;
        for (int k = 1; k <= 3; ++k) {
            base.k = k;
            CodeHandle code = build_code(base);
            CHECK(code.length == 4);
            check_mds(base, 5 - k);  // untwisted
            std::optional<Elt> eta = find_twist(base);
            REQUIRE(eta.has_value());
            CHECK(*eta == (k % 2 == 1 ? 1u : 2u));  // eta != (-1)^k in F_3
            CodeParams twisted = base;
            twisted.eta = *eta;
            check_mds(twisted, 5 - k);
        }
    }
    SUBCASE("q = 9, rho = Frobenius: fixed field F_3, length 4") {
        TowerContext tw9{FieldSpec{3, 2, 1, 1}};
        CodeParams p;
        p.family = Family::MDS_S;
        p.tower = &tw9;
        p.s = 1;
        p.rho = AutSpec{1};
        p.subgroup = SubgroupSpec{3, 1};
        for (int k = 1; k <= 2; ++k) {
            p.k = k;
            CodeHandle code = build_code(p);
            CHECK(code.length == 4);
            CHECK(code.kprime_degree == 1);
            CHECK(code.log_p_cardinality == 2 * k);
            check_mds(p, 5 - k);
            std::optional<Elt> eta = find_twist(p);
            REQUIRE(eta.has_value());
            CodeParams twisted = p;
            twisted.eta = *eta;
            check_mds(twisted, 5 - k);
        }
    }
}

TEST_CASE("MDS_D: q = 9, s = 2, gamma = alpha") {
    TowerContext tw{FieldSpec{3, 2, 1, 2}};
    const FiniteField& K = tw.K();
    CodeParams p;
    p.family = Family::MDS_D;
    p.tower = &tw;
    p.s = 2;
    p.gamma = K.generator();  // primitive, hence a non-square
    for (int k = 1; k <= 3; ++k) {
        p.k = k;
        CodeHandle code = build_code(p);
        CHECK(code.length == 16);
        CHECK(code.length == count_maxD(9, 2));
        CHECK(code.kprime_degree == 1);
        CHECK(code.log_p_cardinality == 4 * k);  // q^{sk} = 3^{4k}
        check_mds(p, 17 - k);
    }
    SUBCASE("a square gamma fails the condition") {
        p.k = 1;
        p.gamma = K.mul(K.generator(), K.generator());
        CHECK_FALSE(check_twist_condition(p).ok);
    }
}

TEST_CASE("twist condition: failure diagnostics") {
    SUBCASE("S: violating composition is a witness") {
        TowerContext tw{FieldSpec{5, 1, 2, 2}};
        QuotCtx ctx{tw, make_tuple(tw, {2, 0, 1}, {1, 2})};
        const FiniteField& L = tw.L();
        bool found_failure = false;
        for (std::uint64_t i = 1; i < L.size() && !found_failure; ++i) {
            CodeParams p = s_params(ctx, 1, L.nth(i));
            TwistVerdict v = check_twist_condition(p);
            if (v.ok) continue;
            found_failure = true;
            REQUIRE(v.violating_composition.size() == 2);
            CHECK(v.violating_composition[0] + v.violating_composition[1] == 1);
            CHECK_FALSE(v.detail.empty());
            // Recompute the witness: N(eta) * N(F_{i,0}^{j_i}) = 1; here
            // sk(n-1) = 2, so the sign factor is +1.
            Elt prod = tw.K().one();
            for (int t = 0; t < 2; ++t)
                prod = tw.K().mul(
                    prod, tw.K().pow(ctx.tuple().polys[t][0],
                                     v.violating_composition[t]));
            Elt neta = tw.norm_between(p.eta, 1, 2);
            CHECK(tw.K().mul(neta, prod) == tw.K().one());
        }
        CHECK(found_failure);
    }
    SUBCASE("MDS_S: eta inside the forbidden coset") {
        TowerContext tw{FieldSpec{3, 1, 1, 3}};
        CodeParams p;
        p.family = Family::MDS_S;
        p.tower = &tw;
        p.s = 3;
        p.k = 1;
        p.subgroup = SubgroupSpec{3, 1};
        p.eta = 2;  // (-1)^{sk} eta = (-1)^3 * 2 = 1 in T
        TwistVerdict v = check_twist_condition(p);
        CHECK_FALSE(v.ok);
        CHECK_FALSE(v.detail.empty());
    }
}

TEST_CASE("min_distance: scheduling and sampling") {
    SmallLrs f;
    CodeHandle code = build_code(s_params(f.ctx, 2));
    SUBCASE("threaded result matches serial") {
        DistanceResult serial = min_distance(code, 1u << 22, 1);
        DistanceResult threaded = min_distance(code, 1u << 22, 3);
        CHECK(serial.exact);
        CHECK(threaded.exact);
        CHECK(serial.d == threaded.d);
        CHECK(serial.argmin_index == threaded.argmin_index);
        CHECK(serial.examined == 80);
    }
    SUBCASE("sampling kicks in below the cap and upper-bounds the distance") {
        DistanceResult exact = min_distance(code);
        DistanceResult sampled = min_distance(code, 50, 1);
        CHECK_FALSE(sampled.exact);
        CHECK(sampled.examined == 50);
        CHECK(sampled.seed != 0);
        CHECK(sampled.d >= exact.d);
        // Deterministic: same seed, same answer.
        DistanceResult again = min_distance(code, 50, 1);
        CHECK(again.d == sampled.d);
        CHECK_THROWS_AS(optimality_verdict(code, sampled), std::invalid_argument);
    }
}

TEST_CASE("codes: parameter validation") {
    SmallLrs f;
    CHECK_THROWS_AS(build_code(s_params(f.ctx, 0)), std::invalid_argument);
    CHECK_THROWS_AS(build_code(s_params(f.ctx, 4)), std::invalid_argument);
    CodeHandle sr = build_code(s_params(f.ctx, 1));
    CHECK_THROWS_AS(codeword_mds(sr, 1), std::invalid_argument);

    TowerContext tw{FieldSpec{3, 2, 1, 2}};
    CodeParams p;
    p.family = Family::MDS_D;
    p.tower = &tw;
    p.s = 2;
    p.k = 1;
    p.gamma = tw.K().generator();
    CodeHandle mds = build_code(p);
    CHECK_THROWS_AS(codeword_sumrank(mds, 1), std::invalid_argument);
    p.gamma = 0;
    CHECK_THROWS_AS(build_code(p), std::invalid_argument);
    CodeParams bad = p;
    bad.gamma = tw.K().generator();
    bad.tower = &f.tw;  // n = 2 tower for an MDS family
    CHECK_THROWS_AS(build_code(bad), std::invalid_argument);
}
