// Serial reference kernels against their OpenMP versions on the generated
// d x d games. Argument: d.

#include <benchmark/benchmark.h>

#include "rank1/lemke_howson.hpp"
#include "rank1/oracle.hpp"
#include "rank1/parametric.hpp"
#include "rank1/polytope.hpp"

using namespace rank1;

namespace {

template <Execution exec>
void vertex_enumeration(benchmark::State& state)
{
    const auto p = build_polyhedron(generate_kt(static_cast<std::size_t>(state.range(0))), Side::P);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_vertices(p, exec));
}

template <Execution exec>
void support_enum(benchmark::State& state)
{
    const auto g = generate_kt(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(support_enumeration(g, {false, exec}));
}

template <Execution exec>
void label_pairs(benchmark::State& state)
{
    const auto g = generate_kt(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(equilibria_by_labels(g, exec));
}

template <Execution exec>
void sweep(benchmark::State& state)
{
    const auto g = generate_kt(static_cast<std::size_t>(state.range(0)));
    EnumerateOptions opts;
    opts.exec = exec;
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_all(g, opts));
}

template <Execution exec>
void gprime(benchmark::State& state)
{
    const auto g = generate_kt(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(gprime_components(g, exec));
}

}   // namespace

BENCHMARK(vertex_enumeration<Execution::Serial>)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(vertex_enumeration<Execution::Parallel>)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(support_enum<Execution::Serial>)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(support_enum<Execution::Parallel>)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(label_pairs<Execution::Serial>)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(label_pairs<Execution::Parallel>)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep<Execution::Serial>)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep<Execution::Parallel>)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(gprime<Execution::Serial>)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(gprime<Execution::Parallel>)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
