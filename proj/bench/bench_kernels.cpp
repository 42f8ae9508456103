#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "aesthetica/affinity.hpp"
#include "aesthetica/generators.hpp"
#include "aesthetica/kernels.hpp"

namespace k = aesthetica::kernels;

namespace {

std::vector<double> samples(std::size_t n) {
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = std::sin(0.001 * static_cast<double>(i)) * std::exp(1e-4 * i);
    return f;
}

std::vector<double> nodes(std::size_t n) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = std::log1p(static_cast<double>(i));
    return x;
}

void BM_derivatives_parallel(benchmark::State& st) {
    const auto f = samples(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(k::derivatives(f, 1e-3));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_derivatives_serial(benchmark::State& st) {
    const auto f = samples(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(k::reference::derivatives(f, 1e-3));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_cumulative_parallel(benchmark::State& st) {
    const auto f = samples(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(k::cumulative_integral(f, 1e-3));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_cumulative_serial(benchmark::State& st) {
    const auto f = samples(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(k::reference::cumulative_integral(f, 1e-3));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_interpolate_parallel(benchmark::State& st) {
    const auto x = nodes(st.range(0));
    const auto y = samples(st.range(0));
    std::vector<double> q(st.range(0));
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = x.back() * static_cast<double>(i) / (q.size() - 1);
    for (auto _ : st) benchmark::DoNotOptimize(k::interpolate(x, y, q));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_interpolate_serial(benchmark::State& st) {
    const auto x = nodes(st.range(0));
    const auto y = samples(st.range(0));
    std::vector<double> q(st.range(0));
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = x.back() * static_cast<double>(i) / (q.size() - 1);
    for (auto _ : st) benchmark::DoNotOptimize(k::reference::interpolate(x, y, q));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_esa_check(benchmark::State& st) {
    using namespace aesthetica;
    const auto c = generators::generate({generators::EsaClass{generators::EsaSign::Plus, 3.0}, 0.5, 4.0,
                                         static_cast<std::size_t>(st.range(0))});
    std::vector<double> grid;
    for (int i = 1; i <= 10; ++i) grid.push_back(0.05 * i);
    const auto t = affinity::esa_parameter_for_grid(c, grid);
    for (auto _ : st) benchmark::DoNotOptimize(affinity::esa_check(t, grid));
}

}  // namespace

BENCHMARK(BM_derivatives_parallel)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_derivatives_serial)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_cumulative_parallel)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_cumulative_serial)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_interpolate_parallel)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_interpolate_serial)->Range(1 << 10, 1 << 18);
BENCHMARK(BM_esa_check)->Arg(2000)->Arg(20000);

BENCHMARK_MAIN();
