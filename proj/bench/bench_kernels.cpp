// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <numeric>

#include "comax/graph.hpp"
#include "comax/kernels.hpp"
#include "comax/ring_spec.hpp"

using namespace comax;

namespace {

const char* const rings[] = {"Z/1000", "GF(2^2) x Z/4 x Z/9", "Z/2 x Z/3 x Z/5 x Z/7"};

const Ring& ring_at(std::int64_t i)
{
    static const RingPtr built[] = {build_ring(rings[0]), build_ring(rings[1]), build_ring(rings[2])};
    return *built[i];
}

template <auto Kernel>
void units(benchmark::State& state)
{
    const Ring& ring = ring_at(state.range(0));
    state.SetLabel(rings[state.range(0)]);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(ring));
}

template <auto Kernel>
void radical(benchmark::State& state)
{
    const Ring& ring = ring_at(state.range(0));
    state.SetLabel(rings[state.range(0)]);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(ring, ring.unit_flags()));
}

template <auto Kernel>
void adjacency(benchmark::State& state)
{
    const Ring& ring = ring_at(state.range(0));
    state.SetLabel(rings[state.range(0)]);
    std::vector<Element> vertices(ring.size());
    std::iota(vertices.begin(), vertices.end(), Element{0});
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(ring.signatures(), vertices));
}

template <auto Kernel>
void eccentricity(benchmark::State& state)
{
    const Ring& ring = ring_at(state.range(0));
    state.SetLabel(rings[state.range(0)]);
    const auto g = build_comaximal_graph(ring, Selector::core);
    for (auto _ : state)
        benchmark::DoNotOptimize(Kernel(g.rows()));
}

} // namespace

BENCHMARK(units<kernels::unit_scan>)->DenseRange(0, 2);
BENCHMARK(units<kernels::unit_scan_serial>)->DenseRange(0, 2);
BENCHMARK(radical<kernels::radical_scan>)->DenseRange(0, 2);
BENCHMARK(radical<kernels::radical_scan_serial>)->DenseRange(0, 2);
BENCHMARK(adjacency<kernels::signature_adjacency>)->DenseRange(0, 2);
BENCHMARK(adjacency<kernels::signature_adjacency_serial>)->DenseRange(0, 2);
BENCHMARK(eccentricity<kernels::eccentricities>)->DenseRange(0, 2);
BENCHMARK(eccentricity<kernels::eccentricities_serial>)->DenseRange(0, 2);

BENCHMARK_MAIN();
