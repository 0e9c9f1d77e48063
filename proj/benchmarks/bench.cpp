#include "cell24/covers.hpp"
#include "cell24/cusps.hpp"
#include "cell24/homology.hpp"
#include "cell24/pairing.hpp"
#include "cell24/search.hpp"
#include "cell24/smith.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace cell24;

namespace {

#ifndef CELL24_DATA_DIR
#define CELL24_DATA_DIR "data"
#endif

const SidePairing& bundled() {
    static SidePairing sp = [] {
        std::ifstream in(std::string(CELL24_DATA_DIR) + "/m_paper.pairing");
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_pairing(ss.str(), Polytope24::instance());
    }();
    return sp;
}

void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> entry(-9, 9);
    int n = int(state.range(0));
    IntegerMatrix a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a.at(r, c) = entry(rng);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(10)->Arg(30);

void BM_DeriveIsometries(benchmark::State& state) {
    const Polytope24& p = Polytope24::instance();
    const SidePairing& sp = bundled();
    for (auto _ : state)
        for (int s = 0; s < 24; ++s)
            benchmark::DoNotOptimize(derive_side_map(p, sp.correspondence(p, s)));
}
BENCHMARK(BM_DeriveIsometries);

void BM_VerifyPoincare(benchmark::State& state) {
    const Polytope24& p = Polytope24::instance();
    const SidePairing& sp = bundled();
    for (auto _ : state) benchmark::DoNotOptimize(verify_poincare(sp, p).overall());
}
BENCHMARK(BM_VerifyPoincare);

void BM_ClassifyCusps(benchmark::State& state) {
    const Polytope24& p = Polytope24::instance();
    GluingSystem gs = GluingSystem::for_base(bundled(), p);
    auto cycles = vertex_cycles(gs);
    for (auto _ : state)
        for (const VertexCycle& c : cycles)
            benchmark::DoNotOptimize(classify_flat(cusp_complex(c, gs)).type);
}
BENCHMARK(BM_ClassifyCusps);

void BM_TruncatedHomology(benchmark::State& state) {
    const Polytope24& p = Polytope24::instance();
    GluingSystem gs = GluingSystem::for_base(bundled(), p);
    for (auto _ : state) benchmark::DoNotOptimize(homology(truncated_complex(gs)));
}
BENCHMARK(BM_TruncatedHomology);

void BM_CoverCensus(benchmark::State& state) {
    const Polytope24& p = Polytope24::instance();
    const SidePairing& sp = bundled();
    IntHomomorphism h, v;
    for (long x : {1, 1, 2, 0, 2, 0, 1, 1, 1, 1, 0, 0}) h.values.push_back(Int(x));
    for (long x : {2, 0, 2, 0, 2, 0, 1, 1, 1, 1, 1, -1}) v.values.push_back(Int(x));
    CoverComplex cc = build_cover(CoverSpec::from_homs(sp, p, h, v, 2, 3));
    for (auto _ : state) benchmark::DoNotOptimize(cusp_census(cc));
}
BENCHMARK(BM_CoverCensus);

void BM_SearchNodes(benchmark::State& state) {
    const Polytope24& p = Polytope24::instance();
    {
        // Warm the candidate and symmetry caches; they are one-time costs.
        SearchConfig warm;
        warm.budget_nodes = 0;
        search(warm, p);
    }
    for (auto _ : state) {
        SearchConfig cfg;
        cfg.mode = SearchConfig::Mode::RandomRestart;
        cfg.seed = 99;
        cfg.budget_nodes = 20000;
        benchmark::DoNotOptimize(search(cfg, p).nodes_visited);
    }
}
BENCHMARK(BM_SearchNodes);

} // namespace

BENCHMARK_MAIN();
