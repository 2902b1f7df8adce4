#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace percsim {

enum class LatticeKind { square, triangular, hexagonal };
enum class Boundary { periodic, open };

/// Lattice kind plus its coordination number (square 4, triangular 6,
/// hexagonal 3). Construct through make_geometry so the pair stays valid.
struct Geometry {
    LatticeKind kind = LatticeKind::square;
    int degree = 4;
};

Geometry make_geometry(LatticeKind kind);

const char* to_string(LatticeKind kind);
const char* to_string(Boundary boundary);
std::optional<LatticeKind> lattice_kind_from_string(std::string_view name);

/// Undirected edge with canonical endpoint order a < b.
struct Edge {
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Integer bond vector from endpoint a to endpoint b in lattice units.
struct BondVec {
    std::int32_t dx = 0;
    std::int32_t dy = 0;

    friend bool operator==(const BondVec&, const BondVec&) = default;
};

/// Finite L x L lattice on a row-major grid (node i sits at x = i % L,
/// y = i / L). Edges are stored sorted by (a, b); the order is a pure
/// function of (geometry, L, boundary). Site dilution marks nodes inactive
/// in `active` instead of reindexing, so union-find arrays and replica
/// comparisons stay index-stable.
struct Lattice {
    Geometry geometry;
    std::uint32_t L = 0;
    std::uint32_t n_nodes = 0;
    Boundary boundary = Boundary::periodic;
    std::vector<Edge> edges;
    std::vector<std::uint8_t> active;  // empty = all nodes active
    std::uint32_t n_active = 0;

    bool all_active() const { return active.empty(); }
    bool is_active(std::uint32_t i) const { return active.empty() || active[i] != 0; }
    std::uint32_t x_of(std::uint32_t i) const { return i % L; }
    std::uint32_t y_of(std::uint32_t i) const { return i / L; }
    std::uint32_t node_at(std::uint32_t x, std::uint32_t y) const { return y * L + x; }
};

/// Minimal-image bond vector between grid neighbors a, b on a periodic
/// L x L torus. Valid whenever the true bond vector has components in
/// {-1, 0, 1}, which build_lattice guarantees for L >= 3.
inline BondVec minimal_image_vec(std::uint32_t a, std::uint32_t b, std::uint32_t L) {
    const auto iL = static_cast<std::int32_t>(L);
    std::int32_t dx = static_cast<std::int32_t>(b % L) - static_cast<std::int32_t>(a % L);
    std::int32_t dy = static_cast<std::int32_t>(b / L) - static_cast<std::int32_t>(a / L);
    if (2 * dx > iL) dx -= iL;
    if (2 * dx < -iL) dx += iL;
    if (2 * dy > iL) dy -= iL;
    if (2 * dy < -iL) dy += iL;
    return {dx, dy};
}

/// Build a square / triangular / hexagonal lattice.
///
/// Throws std::invalid_argument for L < 3 with periodic boundaries (the
/// wraparound would duplicate edges) and for odd L on the hexagonal
/// lattice with periodic boundaries (the brick-wall unit cell does not
/// tile an odd torus).
Lattice build_lattice(Geometry geometry, std::uint32_t L, Boundary boundary);

/// Keep each node independently with probability q; drop all edges touching
/// removed nodes. Node indices are preserved.
Lattice dilute_sites(const Lattice& lattice, double q, std::uint64_t seed);

/// Draw a Bernoulli(prob) activity mask over lattice nodes, one draw per
/// node in index order.
std::vector<std::uint8_t> draw_active_mask(std::uint32_t n_nodes, double prob, std::uint64_t seed);

/// Plain-text edge list: header "geometry L N M boundary", then one
/// "a b" line per edge in canonical order.
std::string serialize_edge_list(const Lattice& lattice);

}  // namespace percsim
