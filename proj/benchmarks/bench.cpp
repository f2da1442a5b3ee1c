#include <benchmark/benchmark.h>

#include "finik/space.hpp"
#include "finik/surgery.hpp"

using namespace finik;

static void bm_canonical_tetrahedron(benchmark::State& state)
{
    JacobiDiagram d = tetrahedron_diagram();
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(bm_canonical_tetrahedron);

static void bm_space_degree2(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(DiagramSpace(2));
}
BENCHMARK(bm_space_degree2);

namespace {

SeifertData trefoil()
{
    SeifertData s;
    s.genus = 1;
    s.V = RationalMatrix(2, 2);
    s.V.at(0, 0) = -1;
    s.V.at(0, 1) = 1;
    s.V.at(1, 0) = 0;
    s.V.at(1, 1) = -1;
    return s;
}

} // namespace

static void bm_stacked_bracket_degree2(benchmark::State& state)
{
    SeifertData s = trefoil();
    diagram_space(2); // build the quotient outside the loop
    for (auto _ : state)
        benchmark::DoNotOptimize(stacked_bracket(s, 2));
}
BENCHMARK(bm_stacked_bracket_degree2);

static void bm_lambda_prime(benchmark::State& state)
{
    SeifertData s = trefoil();
    diagram_space(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(lambda_prime(s));
}
BENCHMARK(bm_lambda_prime);

static void bm_dedekind_sum(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(dedekind_sum(12345, 6789));
}
BENCHMARK(bm_dedekind_sum);

BENCHMARK_MAIN();
