/**
 * @brief Microbenchmarks for the hot paths: skew-polynomial arithmetic,
 * gcrd/bound computations, quotient-ring weight evaluation, and exhaustive
 * minimum-distance scans on small codes.
 */

#include <random>

#include <benchmark/benchmark.h>

#include "skewcode/codes.hpp"

namespace {

using namespace skewcode;

SkewPoly random_skew(const SkewRing& R, std::mt19937_64& rng, int deg) {
    SkewPoly f;
    f.c.assign(static_cast<std::size_t>(deg) + 1, 0);
    for (Elt& c : f.c) c = static_cast<Elt>(rng() % R.L().size());
    if (f.c.back() == 0) f.c.back() = R.L().one();
    return f;
}

// L = F_{5^4} over K = F_5: a midsize tower for the ring benchmarks.
const TowerContext& bench_tower() {
    static TowerContext tw(FieldSpec{5, 1, 4, 1});
    return tw;
}

void bm_skew_mul(benchmark::State& state) {
    const SkewRing R(bench_tower());
    std::mt19937_64 rng(7);
    const int deg = static_cast<int>(state.range(0));
    SkewPoly f = random_skew(R, rng, deg);
    SkewPoly g = random_skew(R, rng, deg);
    for (auto _ : state) benchmark::DoNotOptimize(R.mul(f, g));
}
BENCHMARK(bm_skew_mul)->Arg(8)->Arg(32)->Arg(128);

void bm_skew_gcrd(benchmark::State& state) {
    const SkewRing R(bench_tower());
    std::mt19937_64 rng(11);
    const int deg = static_cast<int>(state.range(0));
    SkewPoly f = random_skew(R, rng, deg);
    SkewPoly g = random_skew(R, rng, deg - 1);
    for (auto _ : state) benchmark::DoNotOptimize(R.gcrd(f, g));
}
BENCHMARK(bm_skew_gcrd)->Arg(8)->Arg(32)->Arg(128);

void bm_bound_of(benchmark::State& state) {
    const SkewRing R(bench_tower());
    std::mt19937_64 rng(13);
    SkewPoly f = random_skew(R, rng, static_cast<int>(state.range(0)));
    if (f.c[0] == 0) f.c[0] = R.L().one();
    for (auto _ : state) benchmark::DoNotOptimize(R.bound_of(f));
}
BENCHMARK(bm_bound_of)->Arg(4)->Arg(8)->Arg(16);

void bm_irr_right_divisor(benchmark::State& state) {
    const SkewRing R(bench_tower());
    const std::vector<poly::Poly> irr = enumerate_Xs(bench_tower(), 2);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        for (const poly::Poly& F : irr)
            if (F[0] != 0)
                benchmark::DoNotOptimize(R.irr_right_divisor(F, seed));
        ++seed;
    }
}
BENCHMARK(bm_irr_right_divisor);

void bm_f_weight(benchmark::State& state) {
    TowerContext tw(FieldSpec{3, 1, 2, 1});
    QuotCtx ctx(tw, make_tuple(tw, {2, 1}, {1, 2}));
    std::mt19937_64 rng(17);
    std::vector<QuotElem> elems;
    const SkewRing& R = ctx.ring();
    for (int i = 0; i < 64; ++i)
        elems.push_back(
            reduce_mod(random_skew(R, rng, ctx.rep_degree_bound() - 1), ctx));
    for (auto _ : state)
        for (const QuotElem& a : elems) benchmark::DoNotOptimize(f_weight(a));
}
BENCHMARK(bm_f_weight);

void bm_min_distance(benchmark::State& state) {
    TowerContext tw(FieldSpec{3, 1, 2, 1});
    QuotCtx ctx(tw, make_tuple(tw, {2, 1}, {1, 2}));
    CodeParams p;
    p.family = Family::S;
    p.ctx = &ctx;
    p.k = static_cast<int>(state.range(0));
    CodeHandle code = build_code(p);
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(code));
}
BENCHMARK(bm_min_distance)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
