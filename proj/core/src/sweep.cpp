#include "percsim/sweep.hpp"

#include <numeric>
#include <stdexcept>

#include "percsim/rng.hpp"
#include "percsim/union_find.hpp"

namespace percsim {

SweepGraph view_of(const Lattice& lattice) {
    SweepGraph g;
    g.n_nodes = lattice.n_nodes;
    g.n_active = lattice.n_active;
    g.L = lattice.L;
    g.periodic = lattice.boundary == Boundary::periodic;
    g.edges = lattice.edges;
    g.active = lattice.active.empty() ? nullptr : &lattice.active;
    return g;
}

SweepGraph view_of(const ContractedGraph& graph) {
    SweepGraph g;
    g.n_nodes = graph.n_nodes;
    g.n_active = static_cast<std::uint32_t>(graph.active_nodes.size());
    g.L = graph.L;
    g.periodic = true;
    g.edges = graph.edges;
    g.vecs = graph.vecs;
    return g;
}

MicroCurve run_sweep(const SweepGraph& graph, std::uint64_t seed, SweepOptions options) {
    if (graph.n_active == 0) {
        throw std::invalid_argument("run_sweep needs at least one active node");
    }
    const std::size_t m = graph.edges.size();
    const bool explicit_vecs = !graph.vecs.empty();

    MicroCurve out;
    out.m_edges = m;
    out.n_nodes = graph.n_nodes;
    out.n_active = graph.n_active;
    out.wrap_detectable = graph.periodic;
    out.seed = seed;

    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0u);
    Rng rng(seed);
    shuffle(order, rng);

    WindingUnionFind uf(graph.n_nodes, graph.active);
    if (options.record_curve) {
        out.lcc.resize(m + 1);
        out.lcc[0] = uf.largest();
    }
    for (std::size_t k = 0; k < m; ++k) {
        const Edge e = graph.edges[order[k]];
        const BondVec b = explicit_vecs ? graph.vecs[order[k]] : minimal_image_vec(e.a, e.b, graph.L);
        const auto res = uf.unite(e.a, e.b, b);
        if (res.wrapped && graph.periodic && !out.wrap_bond) {
            out.wrap_bond = static_cast<std::uint32_t>(k + 1);
        }
        if (options.record_curve) out.lcc[k + 1] = uf.largest();
        if (options.stop_after_wrap && out.wrap_bond) {
            if (options.record_curve) out.lcc.resize(k + 2);
            break;
        }
    }
    out.find_steps = uf.find_steps();
    return out;
}

SiteAdjacency SiteAdjacency::build(const Lattice& lattice) {
    SiteAdjacency adj;
    adj.offsets.assign(lattice.n_nodes + 1, 0);
    for (const Edge& e : lattice.edges) {
        ++adj.offsets[e.a + 1];
        ++adj.offsets[e.b + 1];
    }
    for (std::uint32_t i = 0; i < lattice.n_nodes; ++i) {
        adj.offsets[i + 1] += adj.offsets[i];
    }
    adj.neighbors.resize(2 * lattice.edges.size());
    std::vector<std::uint32_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (const Edge& e : lattice.edges) {
        adj.neighbors[cursor[e.a]++] = e.b;
        adj.neighbors[cursor[e.b]++] = e.a;
    }
    return adj;
}

SiteSweepResult run_site_sweep(const Lattice& lattice, const SiteAdjacency& adjacency,
                               std::uint64_t seed) {
    if (lattice.boundary != Boundary::periodic) {
        throw std::invalid_argument("site sweep wrapping detection needs periodic boundaries");
    }
    const std::uint32_t n = lattice.n_nodes;

    SiteSweepResult out;
    out.n_nodes = n;
    out.seed = seed;

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    Rng rng(seed);
    shuffle(order, rng);

    std::vector<std::uint8_t> occupied(n, 0);
    WindingUnionFind uf(n, &occupied);  // everything starts absent
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint32_t v = order[k];
        occupied[v] = 1;
        uf.activate(v);
        for (std::uint32_t j = adjacency.offsets[v]; j < adjacency.offsets[v + 1]; ++j) {
            const std::uint32_t nb = adjacency.neighbors[j];
            if (!occupied[nb]) continue;
            const auto res = uf.unite(v, nb, minimal_image_vec(v, nb, lattice.L));
            if (res.wrapped && !out.wrap_site) {
                out.wrap_site = k + 1;
            }
        }
    }
    return out;
}

}  // namespace percsim
