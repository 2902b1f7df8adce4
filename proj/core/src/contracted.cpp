#include "percsim/contracted.hpp"

#include <algorithm>
#include <stdexcept>

#include "percsim/rng.hpp"

namespace percsim {

namespace {

struct RawEdge {
    std::uint32_t a, b;
    BondVec vec;  // from a to b
};

// Emit edges between cyclically consecutive active positions of one row or
// column. `positions` must be ascending coordinates along the scan axis.
void link_chain(std::vector<RawEdge>& out, const std::vector<std::uint32_t>& positions,
                std::uint32_t L, bool horizontal, std::uint32_t fixed_coord) {
    const std::size_t k = positions.size();
    if (k < 2) return;  // lone active node would only close a self-loop
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint32_t from = positions[i];
        const std::uint32_t to = positions[(i + 1) % k];
        const auto hop = static_cast<std::int32_t>((to + L - from) % L);
        std::uint32_t a = horizontal ? fixed_coord * L + from : from * L + fixed_coord;
        std::uint32_t b = horizontal ? fixed_coord * L + to : to * L + fixed_coord;
        BondVec vec = horizontal ? BondVec{hop, 0} : BondVec{0, hop};
        if (a > b) {
            std::swap(a, b);
            vec = {-vec.dx, -vec.dy};
        }
        out.push_back({a, b, vec});
    }
}

}  // namespace

ContractedGraph contract_with_mask(const Lattice& lattice, const std::vector<std::uint8_t>& mask,
                                   Pairing pairing) {
    if (lattice.geometry.kind != LatticeKind::square) {
        throw std::invalid_argument("transparent contraction is defined for square lattices");
    }
    if (lattice.boundary != Boundary::periodic) {
        throw std::invalid_argument("transparent contraction needs periodic boundaries");
    }
    if (mask.size() != lattice.n_nodes) {
        throw std::invalid_argument("mask size must match node count");
    }
    (void)pairing;  // straight_through is the only rule

    const std::uint32_t L = lattice.L;
    // A faulty (inactive) site behaves like a transparent one.
    const auto on = [&](std::uint32_t i) { return mask[i] != 0 && lattice.is_active(i); };

    ContractedGraph g;
    g.L = L;
    g.n_nodes = lattice.n_nodes;
    for (std::uint32_t i = 0; i < lattice.n_nodes; ++i) {
        if (on(i)) g.active_nodes.push_back(i);
    }
    g.epsilon = static_cast<double>(g.active_nodes.size()) / static_cast<double>(lattice.n_nodes);

    std::vector<RawEdge> raw;
    raw.reserve(2 * g.active_nodes.size() + 16);
    std::vector<std::uint32_t> positions;
    positions.reserve(L);
    for (std::uint32_t y = 0; y < L; ++y) {
        positions.clear();
        for (std::uint32_t x = 0; x < L; ++x) {
            if (on(y * L + x)) positions.push_back(x);
        }
        link_chain(raw, positions, L, /*horizontal=*/true, y);
    }
    for (std::uint32_t x = 0; x < L; ++x) {
        positions.clear();
        for (std::uint32_t y = 0; y < L; ++y) {
            if (on(y * L + x)) positions.push_back(y);
        }
        link_chain(raw, positions, L, /*horizontal=*/false, x);
    }

    // Canonical order; a row with exactly two active nodes yields the same
    // (a, b) pair twice with complementary hops, keep the shorter one.
    std::sort(raw.begin(), raw.end(), [](const RawEdge& l, const RawEdge& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        const auto lh = std::abs(l.vec.dx) + std::abs(l.vec.dy);
        const auto rh = std::abs(r.vec.dx) + std::abs(r.vec.dy);
        if (lh != rh) return lh < rh;
        return l.vec.dx != r.vec.dx ? l.vec.dx > r.vec.dx : l.vec.dy > r.vec.dy;
    });
    g.edges.reserve(raw.size());
    g.vecs.reserve(raw.size());
    for (const RawEdge& e : raw) {
        if (!g.edges.empty() && g.edges.back() == Edge{e.a, e.b}) continue;
        g.edges.push_back({e.a, e.b});
        g.vecs.push_back(e.vec);
    }
    return g;
}

ContractedGraph contract_transparent(const Lattice& lattice, double epsilon, Pairing pairing,
                                     std::uint64_t seed) {
    if (epsilon <= 0.0 || epsilon > 1.0) {
        throw std::invalid_argument("active fraction epsilon must be in (0, 1]");
    }
    const auto mask = draw_active_mask(lattice.n_nodes, epsilon, seed);
    return contract_with_mask(lattice, mask, pairing);
}

}  // namespace percsim
