#include "ratsurf/cohomology.hpp"
#include "ratsurf/exceptional.hpp"
#include "ratsurf/gaeta.hpp"
#include "ratsurf/sampling.hpp"
#include "ratsurf/strange_duality.hpp"

#include <benchmark/benchmark.h>

using namespace ratsurf;

static void BM_CohomFeSweep(benchmark::State& state) {
    for (auto _ : state) {
        Int acc = 0;
        for (int e = 0; e <= 4; ++e)
            for (long a = -12; a <= 12; ++a)
                for (long b = -12; b <= 12; ++b) acc += cohom_fe(e, a, b).h0;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_CohomFeSweep);

static void BM_CohomBlowup(benchmark::State& state) {
    SurfaceConfig x = SurfaceConfig::blowup(2, 2, {1, 1});
    Sampler rng(1);
    std::vector<DivClass> classes;
    for (int k = 0; k < 256; ++k) classes.push_back(rng.divisor(x, -3, 3));
    for (auto _ : state) {
        for (const auto& d : classes) benchmark::DoNotOptimize(cohom_X(x, d));
    }
}
BENCHMARK(BM_CohomBlowup);

static void BM_ExponentsRoundTrip(benchmark::State& state) {
    SurfaceConfig x = SurfaceConfig::blowup(2, 2, {1, 2});
    Sampler rng(2);
    std::vector<NumClass> classes;
    for (int k = 0; k < 128; ++k) classes.push_back(rng.admitting_class(x, 9));
    for (auto _ : state) {
        for (const auto& f : classes) {
            ExponentsResult er = exponents(x, f);
            benchmark::DoNotOptimize(class_of(x, er.exps));
        }
    }
}
BENCHMARK(BM_ExponentsRoundTrip);

static void BM_VerifySequence(benchmark::State& state) {
    SurfaceConfig x = SurfaceConfig::blowup(2, 2, {1, 1, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_sequence(x).passed);
        benchmark::DoNotOptimize(verify_dual(x).passed);
    }
}
BENCHMARK(BM_VerifySequence);

static void BM_TwistSearch(benchmark::State& state) {
    SurfaceConfig f1 = SurfaceConfig::hirzebruch(1);
    NumClass f{2, DivClass(3, 1, {}), -40};
    for (auto _ : state) benchmark::DoNotOptimize(twist_search(f1, f, 2).feasible);
}
BENCHMARK(BM_TwistSearch);

static void BM_XiDimension(benchmark::State& state) {
    SurfaceConfig x = SurfaceConfig::blowup(1, 1, {1});
    DivClass l = DivClass::zero(x);
    l.a = 80;
    l.b = 40;
    l.g = {Rat(-14), Rat(-6)};
    SDPair p = make_pair(x, 2, 2, l);
    GaetaExponents ve = v_exponents(x, exponents(x, p.sigma).exps, 2);
    for (auto _ : state) benchmark::DoNotOptimize(xi_dimension(x, p, ve).dim_P);
}
BENCHMARK(BM_XiDimension);

BENCHMARK_MAIN();
