#include <benchmark/benchmark.h>

#include <pdmosc/pdmosc.hpp>

using namespace pdmosc;

static void BM_FdSolve(benchmark::State& st)
{
    const auto p = ModelParams::natural(0.4);
    auto cfg = FdConfig::literal(6);
    cfg.n_points = static_cast<int>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(solve_morse_fd(p, MorseVariant::Base, cfg));
}
BENCHMARK(BM_FdSolve)->Arg(2001)->Arg(8001)->Unit(benchmark::kMillisecond);

static void BM_FdReference(benchmark::State& st)
{
    const auto p = ModelParams::natural(0.4);
    for (auto _ : st)
        benchmark::DoNotOptimize(solve_morse_fd(p, MorseVariant::Base, FdConfig::reference(6)));
}
BENCHMARK(BM_FdReference)->Unit(benchmark::kMillisecond);

static void BM_Eigenfunction(benchmark::State& st)
{
    const auto p = ModelParams::natural(0.2);
    const int n = static_cast<int>(st.range(0));
    double x = -1.0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(eigenfunction(p, n, x));
        x = x > 3.0 ? -1.0 : x + 1e-3;
    }
}
BENCHMARK(BM_Eigenfunction)->Arg(0)->Arg(5)->Arg(20);

static void BM_SampleEigenfunction(benchmark::State& st)
{
    const auto p = ModelParams::natural(0.4);
    const auto g = default_grid(p, static_cast<std::size_t>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(sample(p, g, [&](double x) { return eigenfunction(p, 3, x); }));
}
BENCHMARK(BM_SampleEigenfunction)->Arg(4001)->Arg(16001);

static void BM_IntegrateFull(benchmark::State& st)
{
    const auto p = ModelParams::natural(0.4);
    for (auto _ : st)
        benchmark::DoNotOptimize(integrate_full(p, nu(p, 5), [&](double x) {
            return eigenfunction(p, 2, x) * eigenfunction(p, 5, x);
        }));
}
BENCHMARK(BM_IntegrateFull);

static void BM_GridInnerProduct(benchmark::State& st)
{
    const auto p = ModelParams::natural(0.4);
    const auto g = default_grid(p);
    const auto a = sample(p, g, [&](double x) { return eigenfunction(p, 1, x); });
    const auto b = sample(p, g, [&](double x) { return eigenfunction(p, 2, x); });
    for (auto _ : st)
        benchmark::DoNotOptimize(inner_product(p, a, b));
}
BENCHMARK(BM_GridInnerProduct);

static void BM_CoherentWavefunction(benchmark::State& st)
{
    const auto p = ModelParams::natural(0.4);
    const CoherentState s(p, cplx(0.5, 0.3));
    double x = -1.0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(coherent_wavefunction(s, x));
        x = x > 3.0 ? -1.0 : x + 1e-3;
    }
}
BENCHMARK(BM_CoherentWavefunction);

static void BM_Rk4ThreePeriods(benchmark::State& st)
{
    const auto p = ModelParams::natural(0.8);
    for (auto _ : st)
        benchmark::DoNotOptimize(rk4_oracle(p, {1.0, 0.0}, 3.0 * p.tau0(), p.tau0() / 2000.0));
}
BENCHMARK(BM_Rk4ThreePeriods)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
