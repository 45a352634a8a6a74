#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "conc/cap_geometry.hpp"
#include "conc/extremal_profile.hpp"
#include "conc/monte_carlo.hpp"
#include "conc/special.hpp"
#include "conc/verifier.hpp"

namespace {

void BM_Wallis(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(conc::wallis(m).value);
}
BENCHMARK(BM_Wallis)->Arg(10)->Arg(1000);

void BM_CapTail(benchmark::State& state) {
    const conc::SphereDim dim(static_cast<int>(state.range(0)));
    double x = 0.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(conc::cap_tail(dim, x));
        x = x < 1.2 ? x + 1e-6 : 0.2;  // defeat value caching
    }
}
BENCHMARK(BM_CapTail)->Arg(10)->Arg(1000)->Arg(100000);

void BM_Qn(benchmark::State& state) {
    const conc::SphereDim dim(static_cast<int>(state.range(0)));
    double x = 0.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(conc::q_n(dim, x));
        x = x < 1.2 ? x + 1e-6 : 0.2;
    }
}
BENCHMARK(BM_Qn)->Arg(5)->Arg(41);

void BM_TofA(benchmark::State& state) {
    const conc::SphereDim dim(static_cast<int>(state.range(0)));
    double a = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(conc::t_of_a(dim, a));
        a = a < 1.0 ? a + 1e-6 : -1.0;
    }
}
BENCHMARK(BM_TofA)->Arg(3)->Arg(20);

void BM_TwoSidedTail(benchmark::State& state) {
    const conc::SphereDim dim(10);
    double a = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(conc::two_sided_tail(dim, a));
        a = a < 1.0 ? a + 1e-6 : -1.0;
    }
}
BENCHMARK(BM_TwoSidedTail);

void BM_CertifyQ3(benchmark::State& state) {
    const conc::SphereDim three(3);
    conc::SuiteConfig cfg;
    cfg.grid_size = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(conc::certify(
            "bench", [three](double x) { return conc::q_n(three, x); },
            [](double) { return 1.0; }, 0.0, 1.5707963267948966, cfg));
    }
}
BENCHMARK(BM_CertifyQ3)->Arg(500)->Arg(2000);

void BM_SphereSample(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    conc::SphereStream stream{conc::SphereDim(n), 7};
    std::vector<double> u(n);
    for (auto _ : state) {
        stream.next(u);
        benchmark::DoNotOptimize(u[0]);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SphereSample)->Arg(10)->Arg(100);

void BM_NormalQuantile(benchmark::State& state) {
    double p = 1e-8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(conc::normal_quantile(p));
        p = p < 0.999 ? p + 1e-4 : 1e-8;
    }
}
BENCHMARK(BM_NormalQuantile);

}  // namespace

BENCHMARK_MAIN();
