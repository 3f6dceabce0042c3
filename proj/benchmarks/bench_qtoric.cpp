#include <benchmark/benchmark.h>

#include "qtoric/case.hpp"
#include "qtoric/embeddings.hpp"
#include "qtoric/harmonic.hpp"
#include "qtoric/qseries.hpp"
#include "qtoric/quadratic.hpp"
#include "qtoric/verdict.hpp"

using namespace qtoric;

static void BM_Represent(benchmark::State& state)
{
    const Case& c = preset("C1");
    const std::int64_t n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(represent(c.lattice.gram3(), n));
}
BENCHMARK(BM_Represent)->Arg(1003)->Arg(9995);

static void BM_ClassNumber(benchmark::State& state)
{
    auto ds = negative_fundamental_discriminants(state.range(0), state.range(0) + 200);
    for (auto _ : state)
        for (auto d : ds)
            benchmark::DoNotOptimize(class_number(d).h);
}
BENCHMARK(BM_ClassNumber)->Arg(1000)->Arg(100000);

static void BM_HeckeEigenvalue(benchmark::State& state)
{
    const Case& c = preset("C1");
    const long p = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            hecke_eigenvalue(c.lattice, c.units, c.order.reduced_discriminant(), p, c.phi));
}
BENCHMARK(BM_HeckeEigenvalue)->Arg(3)->Arg(13);

static void BM_EtaExpand(benchmark::State& state)
{
    const Case& c = preset("C6");
    for (auto _ : state)
        benchmark::DoNotOptimize(eta_expand(c.eta, state.range(0)));
}
BENCHMARK(BM_EtaExpand)->Arg(1000)->Arg(10000);

static void BM_CentralValue(benchmark::State& state)
{
    const Case& c = preset("C2");
    const std::int64_t d = -state.range(0);
    auto f = eta_expand(c.eta, required_terms(c.weight, c.conductor(), d, 1e-8));
    for (auto _ : state)
        benchmark::DoNotOptimize(twisted_central_value(f, c.weight, c.conductor(), d, 1, 1e-8));
}
BENCHMARK(BM_CentralValue)->Arg(35)->Arg(491);

static void BM_Verdict(benchmark::State& state)
{
    const Case& c = preset("C5");
    const std::int64_t d = -state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(verdict(c, d));
}
BENCHMARK(BM_Verdict)->Arg(7)->Arg(919);

BENCHMARK_MAIN();
