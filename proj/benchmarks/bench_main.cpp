#include <benchmark/benchmark.h>

#include "ptri/brauer.hpp"
#include "ptri/flip.hpp"
#include "ptri/format.hpp"
#include "ptri/potential.hpp"

#include <string>

namespace {

ptri::PartialTriangulation load(const std::string& name, int m = 0) {
    auto t = ptri::load_ptri(std::string(PTRI_FIXTURE_DIR) + "/" + name + ".ptri");
    if (m > 0)
        for (auto& p : t.points) p.multiplicity = m;
    return t;
}

void BM_StructureTable(benchmark::State& state) {
    const auto t = load("torus_triangulation", static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ptri::Algebra alg(t);
        benchmark::DoNotOptimize(alg.structure_table());
    }
    state.counters["rank"] = static_cast<double>(ptri::rank_formula(t));
}
BENCHMARK(BM_StructureTable)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Associativity(benchmark::State& state) {
    const auto sc = ptri::Algebra(load("disc_abcd")).structure_table();
    for (auto _ : state) benchmark::DoNotOptimize(ptri::check_associativity(sc));
}
BENCHMARK(BM_Associativity)->Unit(benchmark::kMillisecond);

void BM_PresentationOracle(benchmark::State& state) {
    const ptri::Algebra alg(load("triangle_mnp", static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(ptri::presentation_oracle(alg));
}
BENCHMARK(BM_PresentationOracle)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Invariants(benchmark::State& state) {
    const auto t = load("triangle_mnp");
    const auto sc = ptri::Algebra(t).structure_table();
    for (auto _ : state) benchmark::DoNotOptimize(ptri::invariant_report(sc, t.arcs.size()));
}
BENCHMARK(BM_Invariants)->Unit(benchmark::kMillisecond);

void BM_FlipAndCompare(benchmark::State& state) {
    const auto t = load("triangle_mnp");
    const int pm = t.arc_index("PM");
    for (auto _ : state) benchmark::DoNotOptimize(ptri::flip_and_compare(t, pm));
}
BENCHMARK(BM_FlipAndCompare)->Unit(benchmark::kMillisecond);

void BM_BrauerCompare(benchmark::State& state) {
    const auto t = ptri::embed_brauer_graph(ptri::random_brauer_graph(7, 6, 3, ptri::RingSpec::rationals()));
    for (auto _ : state) benchmark::DoNotOptimize(ptri::compare_with_delta(t));
}
BENCHMARK(BM_BrauerCompare)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
