#include "doctest.h"

#include <random>

#include "skewcode/tower.hpp"

using namespace skewcode;

namespace {

// Independent oracle arithmetic: schoolbook coefficient vectors mod p reduced
// by an explicit modulus, no field tables involved.
struct Oracle {
    int p;
    std::vector<int> mod;  // monic, length d+1

    std::vector<int> mul(std::vector<int> a, std::vector<int> b) const {
        std::vector<int> r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        // reduce by mod
        const int dm = static_cast<int>(mod.size()) - 1;
        for (int i = static_cast<int>(r.size()) - 1; i >= dm; --i) {
            int c = r[i];
            if (c == 0) continue;
            for (int j = 0; j <= dm; ++j)
                r[i - dm + j] = ((r[i - dm + j] - c * mod[j]) % p + p) % p;
        }
        r.resize(dm, 0);
        return r;
    }
    std::vector<int> pow(std::vector<int> a, std::uint64_t e) const {
        std::vector<int> r(mod.size() - 1, 0);
        r[0] = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

FieldSpec f9_spec() {
    FieldSpec s;
    s.p = 3;
    s.e = 2;
    s.n = 2;
    s.s = 2;
    // α² = α + 1, i.e. modulus y² + 2y + 2 over F_3.
    s.modulus_override[2] = {2, 2, 1};
    return s;
}

}  // namespace

TEST_CASE("degenerate tower: all levels equal F_3") {
    TowerContext tw(FieldSpec{3, 1, 1, 1, {}});
    CHECK(tw.K().size() == 3);
    CHECK(tw.L().size() == 3);
    CHECK(tw.E().size() == 3);
    CHECK(tw.sigma(2) == 2);  // σ = identity on the prime field
}

TEST_CASE("explicit modulus overrides construct and behave") {
    SUBCASE("F_9 with alpha^2 = alpha + 1") {
        TowerContext tw(f9_spec());
        const FiniteField& K = tw.K();
        Elt alpha = K.from_coeffs({0, 1});
        CHECK(K.mul(alpha, alpha) == K.add(alpha, K.one()));
    }
    SUBCASE("F_125 with xi root of y^3 + 3y + 3") {
        FieldSpec s;
        s.p = 5;
        s.e = 1;
        s.n = 3;
        s.s = 3;
        s.modulus_override[3] = {3, 3, 0, 1};
        TowerContext tw(s);
        const FiniteField& L = tw.L();
        Elt xi = L.from_coeffs({0, 1});
        // ξ³ + 3ξ + 3 = 0
        Elt v = L.add(L.add(L.pow(xi, 3), L.scalar_mul(3, xi)), L.from_coeffs({3}));
        CHECK(v == 0);
        CHECK(L.mult_order(xi) == 124);  // xi is a primitive root
    }
}

TEST_CASE("frobenius against the repeated-squaring oracle in F_9") {
    TowerContext tw(f9_spec());
    const FiniteField& K = tw.K();
    Oracle orc{3, {2, 2, 1}};
    Elt alpha = K.from_coeffs({0, 1});
    // α^3 = 2α + 1 per the oracle.
    std::vector<int> a3 = orc.pow({0, 1}, 3);
    CHECK(a3 == std::vector<int>{1, 2});
    CHECK(K.frob(alpha, 1) == K.from_coeffs(a3));

    // frobenius_apply in L = F_81 with σ the 9-power map.
    const FiniteField& L = tw.L();
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Elt a = static_cast<Elt>(rng() % L.size());
        CHECK(tw.frobenius_apply(a, 0, tw.sigma_spec()) == a);
        CHECK(tw.frobenius_apply(a, tw.n(), tw.sigma_spec()) == a);
    }
}

TEST_CASE("norms in F_9/F_3") {
    TowerContext tw(f9_spec());
    const FiniteField& K = tw.K();
    Elt alpha = K.from_coeffs({0, 1});
    Oracle orc{3, {2, 2, 1}};
    // N_{F_9/F_3}(α) = α^4 = 2 by the oracle.
    CHECK(orc.pow({0, 1}, 4) == std::vector<int>{2, 0});
    // Norm from the degree-2 level down to the prime field.
    Elt nv = tw.norm_between(alpha, 1, 2);
    CHECK(nv == 2);
    CHECK(tw.norm_between(K.one(), 1, 2) == 1);
}

TEST_CASE("norm transitivity N_{L/K'} = N_{K/K'} o N_{L/K}") {
    TowerContext tw(f9_spec());  // L = F_81, K = F_9, K' = F_3
    const FiniteField& L = tw.L();
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Elt a = static_cast<Elt>(rng() % L.size());
        Elt via_K = tw.norm_between(tw.norm_between(a, 2, 4), 1, 2);
        CHECK(tw.norm_between(a, 1, 4) == via_K);
    }
}

TEST_CASE("truncated norm") {
    TowerContext tw(f9_spec());
    const FiniteField& L = tw.L();
    std::mt19937_64 rng(13);
    SUBCASE("base cases and N^{jn} = N_{L/K}(a)^j") {
        for (int i = 0; i < 50; ++i) {
            Elt a = static_cast<Elt>(1 + rng() % (L.size() - 1));
            CHECK(tw.truncated_norm(a, 0) == L.one());
            CHECK(tw.truncated_norm(a, 1) == a);
            Elt nrm = tw.norm_in_sup(a, tw.e(), tw.e() * tw.n());
            for (int j = 1; j <= 3; ++j)
                CHECK(tw.truncated_norm(a, j * tw.n()) ==
                      L.pow(nrm, static_cast<std::uint64_t>(j)));
        }
    }
    SUBCASE("recurrence N^{i+1}(a) = N^i(a) sigma^i(a)") {
        for (int i = 0; i < 50; ++i) {
            Elt a = static_cast<Elt>(rng() % L.size());
            for (int k = 0; k <= 2 * tw.n(); ++k)
                CHECK(tw.truncated_norm(a, k + 1) ==
                      L.mul(tw.truncated_norm(a, k), tw.sigma(a, k)));
        }
    }
    SUBCASE("truncated norm over F_9/F_3 with n=2: N^2(alpha) = 2") {
        FieldSpec s;
        s.p = 3;
        s.e = 1;
        s.n = 2;
        s.s = 1;
        s.modulus_override[2] = {2, 2, 1};
        TowerContext tw2(s);
        Elt alpha = tw2.L().from_coeffs({0, 1});
        CHECK(tw2.truncated_norm(alpha, 2) == 2);
    }
}

TEST_CASE("is_square") {
    TowerContext tw(f9_spec());
    const FiniteField& K = tw.K();
    Elt alpha = K.from_coeffs({0, 1});
    CHECK(tw.is_square(K, K.one()).is_square);
    CHECK_FALSE(tw.is_square(K, K.generator()).is_square);
    // In F_9: T = {1, α², α⁴, α⁶} are exactly the squares (α is primitive).
    CHECK(K.mult_order(alpha) == 8);
    for (int k = 0; k < 8; ++k) {
        Elt v = K.pow(alpha, static_cast<std::uint64_t>(k));
        CHECK(tw.is_square(K, v).is_square == (k % 2 == 0));
    }
    // Characteristic 2 answers true with a warning flag.
    TowerContext tw2(FieldSpec{2, 1, 2, 1, {}});
    auto r = tw2.is_square(tw2.L(), tw2.L().generator());
    CHECK(r.is_square);
    CHECK(r.char2_warning);
}

TEST_CASE("field axioms on random triples per level") {
    TowerContext tw(f9_spec());
    for (const FiniteField* F : {&tw.prime(), &tw.K(), &tw.L(), &tw.E()}) {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 1000; ++i) {
            Elt a = static_cast<Elt>(rng() % F->size());
            Elt b = static_cast<Elt>(rng() % F->size());
            Elt c = static_cast<Elt>(rng() % F->size());
            CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
            CHECK(F->add(F->add(a, b), c) == F->add(a, F->add(b, c)));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            if (a != 0) CHECK(F->mul(a, F->inv(a)) == F->one());
            CHECK(F->add(a, F->neg(a)) == 0);
        }
    }
}

TEST_CASE("sigma is an order-n automorphism with fixed field F_q") {
    TowerContext tw(f9_spec());  // L = F_81 over K = F_9
    const FiniteField& L = tw.L();
    const Embedding& emb = tw.embed(tw.e(), tw.n() * tw.e());
    int fixed = 0;
    for (std::uint64_t a = 0; a < L.size(); ++a) {
        Elt x = static_cast<Elt>(a);
        if (tw.sigma(x) == x) {
            ++fixed;
            CHECK(emb.in_image(x));
        }
        CHECK(tw.sigma(x, tw.n()) == x);
    }
    CHECK(fixed == static_cast<int>(tw.q()));
    // order exactly n: sigma^1 is not the identity
    bool moved = false;
    for (std::uint64_t a = 0; a < L.size(); ++a)
        if (tw.sigma(static_cast<Elt>(a)) != static_cast<Elt>(a)) moved = true;
    CHECK(moved);
}

TEST_CASE("norm fibers all have size (|L|-1)/(|sub|-1)") {
    TowerContext tw(f9_spec());
    const FiniteField& L = tw.L();
    const int dsub = tw.e();
    const FiniteField& K = tw.K();
    std::vector<int> fiber(K.size(), 0);
    for (std::uint64_t a = 1; a < L.size(); ++a)
        ++fiber[tw.norm_between(static_cast<Elt>(a), dsub, tw.n() * tw.e())];
    const int expect = static_cast<int>((L.size() - 1) / (K.size() - 1));
    CHECK(fiber[0] == 0);
    for (std::uint64_t b = 1; b < K.size(); ++b) CHECK(fiber[b] == expect);
}

TEST_CASE("norm multiplicativity") {
    TowerContext tw(f9_spec());
    const FiniteField& L = tw.L();
    const FiniteField& K = tw.K();
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        Elt a = static_cast<Elt>(rng() % L.size());
        Elt b = static_cast<Elt>(rng() % L.size());
        CHECK(tw.norm_between(L.mul(a, b), 2, 4) ==
              K.mul(tw.norm_between(a, 2, 4), tw.norm_between(b, 2, 4)));
    }
}

TEST_CASE("fixed field degree of AutSpec") {
    TowerContext tw(f9_spec());  // ne = 4
    CHECK(tw.fixed_field_degree(AutSpec{0}) == 4);
    CHECK(tw.fixed_field_degree(AutSpec{1}) == 1);
    CHECK(tw.fixed_field_degree(AutSpec{2}) == 2);
    CHECK(tw.fixed_field_degree(AutSpec{3}) == 1);
}

TEST_CASE("default moduli are the canonically smallest irreducibles") {
    // Over F_3 the smallest degree-2 irreducible scanning from the constant
    // coefficient upward is y^2 + 1.
    CHECK(FiniteField::smallest_irreducible(3, 2) == std::vector<int>{1, 0, 1});
    // Over F_2 degree 3: the scan hits y^3 + y^2 + 1 before y^3 + y + 1
    // because the low-degree coefficients are compared first.
    CHECK(FiniteField::smallest_irreducible(2, 3) == std::vector<int>{1, 0, 1, 1});
}

TEST_CASE("embedding round-trip and canonical generator") {
    TowerContext tw(f9_spec());
    const Embedding& emb = tw.embed(2, 4);
    const FiniteField& K = tw.K();
    for (std::uint64_t a = 0; a < K.size(); ++a) {
        Elt x = static_cast<Elt>(a);
        CHECK(emb.pull_back(emb.apply(x)) == x);
    }
    // Generator is primitive.
    CHECK(K.mult_order(K.generator()) == K.size() - 1);
}
