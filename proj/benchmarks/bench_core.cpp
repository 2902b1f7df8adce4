#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "percsim/contracted.hpp"
#include "percsim/convolve.hpp"
#include "percsim/lattice.hpp"
#include "percsim/rng.hpp"
#include "percsim/sweep.hpp"
#include "percsim/union_find.hpp"

namespace {

using namespace percsim;

void BM_build_lattice(benchmark::State& state) {
    const auto L = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        Lattice lat = build_lattice(make_geometry(LatticeKind::square), L, Boundary::periodic);
        benchmark::DoNotOptimize(lat.edges.data());
    }
    state.SetItemsProcessed(state.iterations() * 2 * static_cast<std::int64_t>(L) * L);
}
BENCHMARK(BM_build_lattice)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_shuffle_order(benchmark::State& state) {
    const auto m = static_cast<std::size_t>(state.range(0));
    std::vector<std::uint32_t> order(m);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<std::uint32_t>(i);
        Rng rng(seed++);
        shuffle(order, rng);
        benchmark::DoNotOptimize(order.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m));
}
BENCHMARK(BM_shuffle_order)->Arg(1 << 21)->Unit(benchmark::kMillisecond);

void BM_union_find_churn(benchmark::State& state) {
    const auto L = static_cast<std::uint32_t>(state.range(0));
    const Lattice lat = build_lattice(make_geometry(LatticeKind::square), L, Boundary::periodic);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        WindingUnionFind uf(lat.n_nodes);
        for (const Edge& e : lat.edges) {
            BondVec v = minimal_image_vec(e.a, e.b, lat.L);
            uf.unite(e.a, e.b, v);
        }
        benchmark::DoNotOptimize(uf.largest());
        ++seed;
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lat.edges.size()));
}
BENCHMARK(BM_union_find_churn)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_sweep(benchmark::State& state) {
    const auto L = static_cast<std::uint32_t>(state.range(0));
    const Lattice lat = build_lattice(make_geometry(LatticeKind::square), L, Boundary::periodic);
    const SweepGraph view = view_of(lat);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        MicroCurve curve = run_sweep(view, seed++);
        benchmark::DoNotOptimize(curve.lcc.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lat.edges.size()));
}
BENCHMARK(BM_sweep)->Arg(128)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_binomial_window(benchmark::State& state) {
    const auto m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        BinomialWindow w = binomial_window(m, 0.5);
        benchmark::DoNotOptimize(w.pmf.data());
    }
}
BENCHMARK(BM_binomial_window)->Arg(1 << 17)->Arg(1 << 24);

void BM_convolve_grid(benchmark::State& state) {
    const auto L = static_cast<std::uint32_t>(state.range(0));
    const Lattice lat = build_lattice(make_geometry(LatticeKind::square), L, Boundary::periodic);
    const MicroCurve curve = run_sweep(view_of(lat), 1);
    std::vector<double> grid;
    for (int i = 0; i <= 24; ++i) grid.push_back(i / 24.0);
    for (auto _ : state) {
        CanonicalCurve canon = convolve_binomial(curve, grid, curve.n_nodes);
        benchmark::DoNotOptimize(canon.f_mean.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_convolve_grid)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_contract_transparent(benchmark::State& state) {
    const auto L = static_cast<std::uint32_t>(state.range(0));
    const Lattice lat = build_lattice(make_geometry(LatticeKind::square), L, Boundary::periodic);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        ContractedGraph g = contract_transparent(lat, 0.01, Pairing::straight_through, seed++);
        benchmark::DoNotOptimize(g.edges.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lat.n_nodes));
}
BENCHMARK(BM_contract_transparent)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
