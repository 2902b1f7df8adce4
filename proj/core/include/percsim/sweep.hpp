#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "percsim/contracted.hpp"
#include "percsim/lattice.hpp"

namespace percsim {

/// Non-owning view of a graph the sweep can run on. When `vecs` is empty,
/// bond vectors are recovered from node coordinates by minimal image
/// (regular lattices); otherwise `vecs[i]` belongs to `edges[i]`
/// (contracted graphs, whose hops can exceed half the lattice).
struct SweepGraph {
    std::uint32_t n_nodes = 0;
    std::uint32_t n_active = 0;
    std::uint32_t L = 0;
    bool periodic = true;
    std::span<const Edge> edges;
    std::span<const BondVec> vecs;
    const std::vector<std::uint8_t>* active = nullptr;  // null = all active
};

SweepGraph view_of(const Lattice& lattice);
SweepGraph view_of(const ContractedGraph& graph);

/// Microcanonical record of one incremental-percolation pass: the largest
/// component size after each of the M bond additions, and the first bond
/// count at which a cluster wound around the torus.
struct MicroCurve {
    std::vector<std::uint32_t> lcc;           // M + 1 entries; empty iff record_curve = false
    std::optional<std::uint32_t> wrap_bond;   // bonds added when the first wrap appeared
    std::uint64_t m_edges = 0;
    std::uint32_t n_nodes = 0;
    std::uint32_t n_active = 0;
    bool wrap_detectable = false;             // false for open boundaries
    std::uint64_t find_steps = 0;
    std::uint64_t seed = 0;
};

struct SweepOptions {
    bool record_curve = true;
    /// Stop adding edges once the first wrap is seen (onset-only runs).
    /// With record_curve the lcc array then stays truncated at the wrap.
    bool stop_after_wrap = false;
};

/// Add all edges in a seeded uniform random order under winding union-find.
/// Throws std::invalid_argument when the graph has no active node.
MicroCurve run_sweep(const SweepGraph& graph, std::uint64_t seed, SweepOptions options = {});

/// CSR adjacency for site-ordered sweeps; build once per lattice.
struct SiteAdjacency {
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> neighbors;

    static SiteAdjacency build(const Lattice& lattice);
};

struct SiteSweepResult {
    std::optional<std::uint32_t> wrap_site;  // sites occupied when the first wrap appeared
    std::uint32_t n_nodes = 0;
    std::uint64_t seed = 0;
};

/// Site-percolation analogue of run_sweep: occupy nodes one at a time in a
/// seeded random order, joining each new node to its occupied neighbors
/// with all bonds present.
SiteSweepResult run_site_sweep(const Lattice& lattice, const SiteAdjacency& adjacency,
                               std::uint64_t seed);

}  // namespace percsim
