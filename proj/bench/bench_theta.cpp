#include "qmlab/theta.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

qm::SiegelPoint sample()
{
    std::mt19937_64 rng(1);
    return qm::random_siegel_point(rng);
}

void box_serial(benchmark::State& st)
{
    auto tau = sample();
    for (auto _ : st) benchmark::DoNotOptimize(qm::theta_box_sum_serial({0.5, 0.25}, tau, int(st.range(0))));
}
void box_omp(benchmark::State& st)
{
    auto tau = sample();
    for (auto _ : st) benchmark::DoNotOptimize(qm::theta_box_sum_omp({0.5, 0.25}, tau, int(st.range(0))));
}

std::vector<qm::SiegelPoint> batch(int n)
{
    std::mt19937_64 rng(2);
    std::vector<qm::SiegelPoint> v;
    for (int k = 0; k < n; ++k) v.push_back(qm::random_siegel_point(rng));
    return v;
}
void psi_serial(benchmark::State& st)
{
    auto v = batch(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(qm::psi_D_batch_serial(v));
}
void psi_omp(benchmark::State& st)
{
    auto v = batch(int(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(qm::psi_D_batch(v));
}

} // namespace

BENCHMARK(box_serial)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(box_omp)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(psi_serial)->Arg(64)->Arg(512);
BENCHMARK(psi_omp)->Arg(64)->Arg(512);
BENCHMARK_MAIN();
