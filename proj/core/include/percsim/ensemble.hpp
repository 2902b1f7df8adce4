#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "percsim/contracted.hpp"
#include "percsim/convolve.hpp"
#include "percsim/lattice.hpp"
#include "percsim/sweep.hpp"

namespace percsim {

/// Run body(replica) for replica = 0 .. replicas - 1 on up to `workers`
/// threads. Replicas are claimed from a shared counter, so bodies must
/// write results into replica-indexed slots; anything merged afterwards in
/// replica order is then independent of scheduling. The first exception
/// thrown by any replica is rethrown after all threads join.
void parallel_replicas(int replicas, int workers, const std::function<void(int)>& body);

/// Owns (or aliases) the arrays backing a SweepGraph. Factories return one
/// per replica; view() stays valid for the lifetime of the storage and of
/// any aliased lattice.
struct SweepStorage {
    std::vector<Edge> owned_edges;
    std::vector<BondVec> owned_vecs;         // empty = minimal image
    std::vector<std::uint8_t> owned_active;  // empty = all nodes active
    std::span<const Edge> shared_edges;      // used when owns = false
    const std::vector<std::uint8_t>* shared_active = nullptr;
    bool owns = true;
    std::uint32_t n_nodes = 0;
    std::uint32_t n_active = 0;
    std::uint32_t L = 0;
    bool periodic = true;

    SweepGraph view() const;
};

/// Storage aliasing a caller-owned lattice (no copy).
SweepStorage storage_of(const Lattice& lattice);
/// Storage taking over a lattice's arrays (per-replica graphs).
SweepStorage storage_of(Lattice&& lattice);
/// Storage taking over a contracted graph's arrays.
SweepStorage storage_of(ContractedGraph&& graph);

/// Builds the replica'th graph. Called from worker threads; must be safe
/// to invoke concurrently.
using GraphFactory = std::function<SweepStorage(int replica)>;

struct EnsembleOptions {
    int replicas = 1;
    std::uint64_t base_seed = 1;
    int workers = 1;
};

/// Average canonical curves over replicas whose graphs come from `factory`.
/// Replica r sweeps its own graph in the order seeded by
/// derive_seed(base_seed, r, bond_order); fractions are normalized by
/// n_norm. Mean and standard error are over replicas, accumulated in
/// replica order.
CanonicalCurve ensemble_run(const GraphFactory& factory, std::span<const double> p_grid,
                            std::uint32_t n_norm, const EnsembleOptions& options);

/// Ensemble over one fixed lattice shared by all replicas (only the bond
/// order varies); fractions are normalized by the lattice's active count.
CanonicalCurve ensemble_run(const Lattice& lattice, std::span<const double> p_grid,
                            const EnsembleOptions& options);

}  // namespace percsim
