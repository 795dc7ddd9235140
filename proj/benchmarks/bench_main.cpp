#include <benchmark/benchmark.h>

#include <powerpoly/powerpoly.hpp>

namespace powerpoly {
namespace {

Polynomial parse(const char* text, const std::vector<std::string>& vars) { return parse_poly(text, vars); }

void BM_BuchbergerExampleModel(benchmark::State& state) {
    auto v = ContingencyShape{2, 3}.variable_names();
    NullHypothesis h = custom({parse("p11*p22 - p12*p21", v), parse("p11*p23 - p13*p21", v),
                               parse("2*p11 + 2*p21 - p11 - p12 - p13", v)},
                              v);
    auto gens = h.substituted_generators();
    for (auto _ : state) benchmark::DoNotOptimize(buchberger_reduced(gens, MonomialOrder::GradedRevLex));
}
BENCHMARK(BM_BuchbergerExampleModel)->Unit(benchmark::kMillisecond);

void BM_BuchbergerRankMinors(benchmark::State& state) {
    NullHypothesis h = rank_less_than(3, 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(hypothesis_basis(h));
}
BENCHMARK(BM_BuchbergerRankMinors)->Unit(benchmark::kMillisecond);

void BM_SphereVertexEnumeration(benchmark::State& state) {
    Polynomial f = sphere(3, parse_rational("1/6")).generators[0];
    CoefficientPolytope p = coefficient_polytope(f, static_cast<unsigned>(state.range(0)), parse_rational("1/20"));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(p));
}
BENCHMARK(BM_SphereVertexEnumeration)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CoefficientPolytopeLP(benchmark::State& state) {
    Polynomial f = sphere(3, parse_rational("1/6")).generators[0];
    UMPUSearchOptions opts;
    opts.enumerate = false;
    for (auto _ : state) benchmark::DoNotOptimize(umpu_search(f, 7, parse_rational("1/20"), 3, nullptr, opts));
}
BENCHMARK(BM_CoefficientPolytopeLP)->Unit(benchmark::kMillisecond);

void BM_MaxStatisticPowerGrid(benchmark::State& state) {
    TestFunction phi = max_statistic_test(static_cast<unsigned>(state.range(0)), parse_rational("1/4"),
                                          parse_rational("848509/1000000"));
    for (auto _ : state) benchmark::DoNotOptimize(power_grid(phi, 51, parse_rational("1/2")));
}
BENCHMARK(BM_MaxStatisticPowerGrid)->Arg(15)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_MonteCarloPower(benchmark::State& state) {
    TestFunction phi = max_statistic_test(15, parse_rational("1/4"), parse_rational("848509/1000000"));
    for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_power(phi, {0.25, 0.25, 0.5}, 100000, 1));
}
BENCHMARK(BM_MonteCarloPower)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace powerpoly

BENCHMARK_MAIN();
