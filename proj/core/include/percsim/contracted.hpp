#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "percsim/lattice.hpp"

namespace percsim {

/// Port pairing rule inside a transparent node. straight_through fuses
/// West<->East and North<->South, so light crosses the node along its row
/// or column.
enum class Pairing { straight_through };

/// Square lattice with a fraction of nodes made transparent: each active
/// node connects to the nearest active node in each cardinal direction,
/// looking through consecutive transparent nodes (periodic wrap). Edges
/// carry the signed hop vector from a to b so winding detection still
/// works after contraction; hop (number of lattice steps spanned) is
/// |dx| + |dy|.
struct ContractedGraph {
    std::uint32_t L = 0;
    std::uint32_t n_nodes = 0;  // nodes of the source lattice
    std::vector<std::uint32_t> active_nodes;
    std::vector<Edge> edges;    // canonical (a, b) order, no self-loops, no duplicates
    std::vector<BondVec> vecs;  // parallel to edges
    double epsilon = 0.0;       // realized active fraction

    std::int32_t hop(std::size_t edge_index) const {
        const BondVec& v = vecs[edge_index];
        return std::abs(v.dx) + std::abs(v.dy);
    }
};

/// Contract with an explicit activity mask (1 = active, 0 = transparent).
/// Requires a square lattice with periodic boundaries.
ContractedGraph contract_with_mask(const Lattice& lattice, const std::vector<std::uint8_t>& mask,
                                   Pairing pairing);

/// Contract with each node independently active with probability epsilon.
/// Rejects epsilon = 0 and non-square geometry.
ContractedGraph contract_transparent(const Lattice& lattice, double epsilon, Pairing pairing,
                                     std::uint64_t seed);

}  // namespace percsim
