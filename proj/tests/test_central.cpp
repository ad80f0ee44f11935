#include <algorithm>
#include <set>
#include <vector>

#include <doctest.h>

#include "skewcode/central.hpp"
#include "skewcode/skew.hpp"

using namespace skewcode;

namespace {

// Sorted copy for order-insensitive set comparison.
std::vector<poly::Poly> sorted(std::vector<poly::Poly> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("mobius function") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(3) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(210) == 1);
    // Sum of mu over the divisors of s vanishes for s > 1.
    for (int s = 2; s <= 12; ++s) {
        int sum = 0;
        for (int d = 1; d <= s; ++d)
            if (s % d == 0) sum += mobius(d);
        CHECK(sum == 0);
    }
}

TEST_CASE("irreducible counts |X_s|") {
    CHECK(count_Xs(2, 1) == 2);
    CHECK(count_Xs(2, 2) == 1);
    CHECK(count_Xs(2, 3) == 2);
    CHECK(count_Xs(2, 4) == 3);
    CHECK(count_Xs(3, 1) == 3);
    CHECK(count_Xs(3, 2) == 3);
    CHECK(count_Xs(3, 3) == 8);
    CHECK(count_Xs(9, 2) == 36);   // (81 - 9) / 2
    CHECK(count_Xs(5, 3) == 40);   // (125 - 5) / 3

    // Enumerations agree with the counts and contain only monic irreducibles.
    TowerContext t2(FieldSpec{2, 1, 1, 1, {}});
    TowerContext t3(FieldSpec{3, 1, 1, 1, {}});
    for (int s = 1; s <= 4; ++s) {
        auto xs = enumerate_Xs(t2, s);
        CHECK(static_cast<std::int64_t>(xs.size()) == count_Xs(2, s));
        for (const auto& F : xs) {
            CHECK(poly::degree(F) == s);
            CHECK(poly::is_monic(t2.K(), F));
            CHECK(is_irreducible_over_K(t2, F));
        }
    }
    for (int s = 1; s <= 3; ++s)
        CHECK(static_cast<std::int64_t>(enumerate_Xs(t3, s).size()) == count_Xs(3, s));
}

TEST_CASE("norm-restricted counts |X_{T,s}|") {
    // Full group T = F_q^*: only y is excluded in degree 1.
    CHECK(count_XTs(3, 1, SubgroupSpec{3, 2}) == 2);
    CHECK(count_XTs(5, 1, SubgroupSpec{5, 4}) == 4);
    // Degree >= 2 irreducibles never vanish at 0, so the full group keeps all.
    CHECK(count_XTs(3, 3, SubgroupSpec{3, 2}) == count_Xs(3, 3));
    CHECK(count_XTs(5, 2, SubgroupSpec{5, 4}) == count_Xs(5, 2));
    // Trivial subgroup halves/quarters the constant terms.
    CHECK(count_XTs(3, 3, SubgroupSpec{3, 1}) == 4);
    CHECK(count_XTs(3, 2, SubgroupSpec{3, 1}) == 1);
    // D-family count at q = 9, s = 2: (81 - 16) / 4 = 16.
    CHECK(count_maxD(9, 2) == 16);
    // s = 2 closed form (q - 1)^2 / 4 for the squares subgroup with q0 = q.
    CHECK(count_maxD(5, 2) == 4);
    CHECK(count_maxD(7, 2) == 9);
    CHECK(count_maxD(9, 2) == 16);

    CHECK_THROWS_AS(count_XTs(9, 2, SubgroupSpec{3, 5}), std::invalid_argument);
    CHECK_THROWS_AS(count_XTs(10, 2, SubgroupSpec{3, 2}), std::invalid_argument);
    CHECK_THROWS_AS(squares_subgroup(4), std::invalid_argument);
}

TEST_CASE("X_{T,3} over F_3: explicit lists") {
    TowerContext tw(FieldSpec{3, 1, 3, 3, {}});
    const FiniteField& K = tw.K();
    // X_{F_3^*, 3}: all eight monic irreducible cubics with nonzero norm.
    const std::vector<poly::Poly> expected_full = {
        {1, 2, 0, 1},  // y^3 + 2y + 1
        {1, 0, 2, 1},  // y^3 + 2y^2 + 1
        {1, 2, 1, 1},  // y^3 + y^2 + 2y + 1
        {1, 1, 2, 1},  // y^3 + 2y^2 + y + 1
        {2, 0, 1, 1},  // y^3 + y^2 + 2
        {2, 2, 0, 1},  // y^3 + 2y + 2
        {2, 1, 1, 1},  // y^3 + y^2 + y + 2
        {2, 2, 2, 1},  // y^3 + 2y^2 + 2y + 2
    };
    auto full = enumerate_XTs(tw, 3, SubgroupSpec{3, 2});
    CHECK(full.size() == 8);
    CHECK(sorted(full) == sorted(expected_full));
    CHECK(full == enumerate_Xs(tw, 3));

    // T = {1}: the four with (-1)^3 F(0) = -F(0) = 1, i.e. F(0) = 2; their
    // roots are exactly the norm-1 elements of degree 3.
    const std::vector<poly::Poly> expected_triv = {
        {2, 0, 1, 1}, {2, 2, 0, 1}, {2, 1, 1, 1}, {2, 2, 2, 1}};
    auto triv = enumerate_XTs(tw, 3, SubgroupSpec{3, 1});
    CHECK(triv.size() == 4);
    CHECK(sorted(triv) == sorted(expected_triv));
    for (const auto& F : triv) CHECK(K.neg(F[0]) == K.one());
    // Cross-check through root norms: each root in F_27 has norm 1 down to K.
    {
        const Embedding& emb = tw.embed(1, 3);
        const FiniteField& F27 = tw.field_of_degree(3);
        for (const auto& F : triv) {
            bool found = false;
            for (std::uint64_t i = 0; i < F27.size(); ++i)
                if (poly::evaluate_embedded(emb, F, F27.nth(i)) == 0) {
                    CHECK(tw.norm_between(F27.nth(i), 1, 3) == K.one());
                    found = true;
                    break;
                }
            CHECK(found);
        }
    }

    // Canonical enumeration order: strictly increasing under the c_0-major
    // word order used by the enumerator.
    for (std::size_t i = 1; i < full.size(); ++i) {
        std::vector<Elt> a = {full[i - 1][0], full[i - 1][1], full[i - 1][2]};
        std::vector<Elt> b = {full[i][0], full[i][1], full[i][2]};
        CHECK(a < b);
    }
}

TEST_CASE("Z_{T,2} over F_9: explicit list") {
    // F_9 = F_3(alpha) with alpha^2 = alpha + 1, the reference presentation.
    TowerContext tw(FieldSpec{3, 2, 2, 2, {{2, {2, 2, 1}}}});
    const FiniteField& K = tw.K();
    const Elt alpha = K.from_coeffs({0, 1});
    CHECK(K.mul(alpha, alpha) == K.add(alpha, K.one()));
    auto ap = [&](int k) { return K.pow(alpha, static_cast<std::uint64_t>(k)); };
    const Elt two = K.from_coeffs({2});

    const std::vector<poly::Poly> expected = {
        {ap(2), K.one(), K.one()}, {ap(6), ap(6), K.one()},
        {two, ap(3), K.one()},     {two, ap(7), K.one()},
        {ap(6), K.one(), K.one()}, {ap(2), ap(2), K.one()},
        {K.one(), ap(7), K.one()}, {two, alpha, K.one()},
        {two, ap(5), K.one()},     {ap(6), two, K.one()},
        {ap(2), ap(6), K.one()},   {K.one(), alpha, K.one()},
        {ap(6), ap(2), K.one()},   {ap(2), two, K.one()},
        {K.one(), ap(5), K.one()}, {K.one(), ap(3), K.one()},
    };
    auto zs = enumerate_ZTs(tw, 2);
    CHECK(zs.size() == 16);
    CHECK(static_cast<std::int64_t>(zs.size()) == count_maxD(9, 2));
    CHECK(sorted(zs) == sorted(expected));
    // Membership law: F(0) = (-1)^2 F(0) must be a square in F_9.
    for (const auto& F : zs) CHECK(tw.is_square(K, F[0]).is_square);
}

TEST_CASE("admissible tuples by lambda-scaling") {
    TowerContext tw(FieldSpec{5, 1, 2, 2, {}});
    const FiniteField& K = tw.K();
    // Smallest monic irreducible quadratic over F_5 with nonzero constant.
    const poly::Poly F = {K.from_coeffs({2}), K.zero(), K.one()};  // y^2 + 2
    REQUIRE(is_irreducible_over_K(tw, F));

    auto tuple = make_tuple(tw, F, {K.one(), K.from_coeffs({2})});
    CHECK(tuple.t() == 2);
    CHECK(tuple.s() == 2);
    CHECK(tuple.polys[0] == F);
    CHECK(tuple.polys[1] == poly::lambda_scale(K, F, K.from_coeffs({2})));
    CHECK(tuple.H == poly::mul(K, tuple.polys[0], tuple.polys[1]));
    CHECK(tuple.base.has_value());
    CHECK(tuple.lambdas.has_value());
    // F_i(0) = lambda_i^{-s} F(0).
    for (int i = 0; i < tuple.t(); ++i) {
        Elt li = (*tuple.lambdas)[i];
        CHECK(tuple.polys[i][0] ==
              K.mul(K.inv(K.pow(li, 2)), F[0]));
    }
    auto cert = validate_admissible(tw, tuple, /*check_lclm=*/true);
    CHECK(cert.valid);
    CHECK(cert.lclm_checked);

    // lambda^s collisions and degenerate inputs are rejected.
    CHECK_THROWS_AS(make_tuple(tw, F, {K.one(), K.from_coeffs({4})}),
                    std::invalid_argument);  // (-1)^2 = 1^2
    CHECK_THROWS_AS(make_tuple(tw, F, {K.zero()}), std::invalid_argument);
    CHECK_THROWS_AS(make_tuple(tw, F, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_tuple(tw, poly::Poly{K.zero(), K.one()}, {K.one()}),
                    std::invalid_argument);  // base F = y
    CHECK_THROWS_AS(
        make_tuple(tw, poly::Poly{K.from_coeffs({4}), K.zero(), K.one()},
                   {K.one()}),
        std::invalid_argument);  // y^2 + 4 = (y+1)(y+4) reducible

    // Maximal scaling family: lambda over all of F_5^* gives t distinct
    // components exactly when the lambda^s values stay distinct; s = 2 over
    // F_5 admits two classes {1,4} -> 1 and {2,3} -> 4.
    auto big = make_tuple(tw, F, {K.one(), K.from_coeffs({2})});
    CHECK(validate_admissible(tw, big, false).valid);
}

TEST_CASE("validate_admissible: failure diagnostics") {
    TowerContext tw(FieldSpec{3, 1, 2, 2, {}});
    const FiniteField& K = tw.K();
    const poly::Poly irr1 = {K.one(), K.zero(), K.one()};          // y^2 + 1
    const poly::Poly irr2 = {K.from_coeffs({2}), K.one(), K.one()};  // y^2+y+2

    auto good = tuple_from_polys(tw, {irr1, irr2});
    CHECK(validate_admissible(tw, good, true).valid);

    auto dup = tuple_from_polys(tw, {irr1, irr1});
    auto c1 = validate_admissible(tw, dup, false);
    CHECK_FALSE(c1.valid);
    CHECK(c1.failing_index == 1);

    auto red = tuple_from_polys(tw, {poly::Poly{K.from_coeffs({2}), K.zero(), K.one()}});
    auto c2 = validate_admissible(tw, red, false);  // y^2 + 2 = (y+1)(y+2)
    CHECK_FALSE(c2.valid);
    CHECK(c2.reason == "reducible component");

    auto mixed = tuple_from_polys(tw, {irr1, poly::Poly{K.one(), K.one()}});
    CHECK_FALSE(validate_admissible(tw, mixed, false).valid);

    auto ymem = tuple_from_polys(tw, {poly::Poly{K.zero(), K.one()}});
    auto c3 = validate_admissible(tw, ymem, false);
    CHECK_FALSE(c3.valid);
    CHECK(c3.reason == "zero constant coefficient (F_i = y excluded)");

    auto tampered = good;
    tampered.H = irr1;
    CHECK_FALSE(validate_admissible(tw, tampered, false).valid);

    CHECK_FALSE(validate_admissible(tw, AdmissibleTuple{}, false).valid);
}

TEST_CASE("evaluation sets A and B") {
    // q = 3, s = 2, T = {1}: X_{T,2} = {y^2 + 1}, a single point.
    TowerContext t3(FieldSpec{3, 1, 2, 2, {}});
    auto A = eval_set_A(t3, 2, SubgroupSpec{3, 1});
    REQUIRE(A.size() == 1);
    const FiniteField& E3 = t3.field_of_degree(2);
    CHECK(E3.add(E3.mul(A[0], A[0]), E3.one()) == 0);
    // Determinism.
    CHECK(A == eval_set_A(t3, 2, SubgroupSpec{3, 1}));

    // Full group: |A| = |X_{2}| = 3 points, pairwise distinct, each a root of
    // its polynomial under the canonical embedding.
    auto polys = enumerate_XTs(t3, 2, SubgroupSpec{3, 2});
    auto Afull = eval_set_A(t3, 2, SubgroupSpec{3, 2});
    REQUIRE(Afull.size() == polys.size());
    const Embedding& emb = t3.embed(1, 2);
    std::set<Elt> seen;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        CHECK(poly::evaluate_embedded(emb, polys[i], Afull[i]) == 0);
        seen.insert(Afull[i]);
    }
    CHECK(seen.size() == Afull.size());

    // B at q = 9 (reference presentation): 16 points in F_{81}.
    TowerContext t9(FieldSpec{3, 2, 2, 2, {{2, {2, 2, 1}}}});
    auto B = eval_set_B(t9, 2);
    CHECK(B.size() == 16);
    auto zs = enumerate_ZTs(t9, 2);
    const Embedding& emb9 = t9.embed(2, 4);
    std::set<Elt> bseen;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        CHECK(poly::evaluate_embedded(emb9, zs[i], B[i]) == 0);
        bseen.insert(B[i]);
    }
    CHECK(bseen.size() == B.size());

    // Preconditions of the B set.
    TowerContext todd(FieldSpec{3, 1, 2, 2, {}});
    CHECK_THROWS_AS(eval_set_B(todd, 2), std::invalid_argument);
    TowerContext tchar2(FieldSpec{2, 2, 2, 2, {}});
    CHECK_THROWS_AS(eval_set_B(tchar2, 2), std::invalid_argument);
}
