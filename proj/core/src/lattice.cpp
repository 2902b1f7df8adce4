#include "percsim/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "percsim/rng.hpp"

namespace percsim {

Geometry make_geometry(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::square: return {kind, 4};
        case LatticeKind::triangular: return {kind, 6};
        case LatticeKind::hexagonal: return {kind, 3};
    }
    throw std::invalid_argument("unknown lattice kind");
}

const char* to_string(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::square: return "square";
        case LatticeKind::triangular: return "triangular";
        case LatticeKind::hexagonal: return "hexagonal";
    }
    return "?";
}

const char* to_string(Boundary boundary) {
    return boundary == Boundary::periodic ? "periodic" : "open";
}

std::optional<LatticeKind> lattice_kind_from_string(std::string_view name) {
    if (name == "square") return LatticeKind::square;
    if (name == "triangular") return LatticeKind::triangular;
    if (name == "hexagonal") return LatticeKind::hexagonal;
    return std::nullopt;
}

namespace {

void push_edge(std::vector<Edge>& edges, std::uint32_t u, std::uint32_t v) {
    if (u == v) return;
    if (u > v) std::swap(u, v);
    edges.push_back({u, v});
}

}  // namespace

Lattice build_lattice(Geometry geometry, std::uint32_t L, Boundary boundary) {
    const bool periodic = boundary == Boundary::periodic;
    if (periodic && L < 3) {
        throw std::invalid_argument("periodic lattice needs L >= 3");
    }
    if (L < 1) {
        throw std::invalid_argument("lattice needs L >= 1");
    }
    if (geometry.kind == LatticeKind::hexagonal && periodic && L % 2 != 0) {
        throw std::invalid_argument("periodic hexagonal lattice needs even L");
    }

    Lattice lat;
    lat.geometry = geometry;
    lat.L = L;
    lat.n_nodes = L * L;
    lat.boundary = boundary;
    lat.n_active = lat.n_nodes;
    lat.edges.reserve(static_cast<std::size_t>(lat.n_nodes) * geometry.degree / 2);

    const auto wrap = [L](std::uint32_t c) { return c == L ? 0u : c; };

    for (std::uint32_t y = 0; y < L; ++y) {
        for (std::uint32_t x = 0; x < L; ++x) {
            const std::uint32_t i = y * L + x;
            const bool x_edge_ok = periodic || x + 1 < L;
            const bool y_edge_ok = periodic || y + 1 < L;
            switch (geometry.kind) {
                case LatticeKind::square:
                    if (x_edge_ok) push_edge(lat.edges, i, y * L + wrap(x + 1));
                    if (y_edge_ok) push_edge(lat.edges, i, wrap(y + 1) * L + x);
                    break;
                case LatticeKind::triangular:
                    // Square grid plus one diagonal per cell.
                    if (x_edge_ok) push_edge(lat.edges, i, y * L + wrap(x + 1));
                    if (y_edge_ok) push_edge(lat.edges, i, wrap(y + 1) * L + x);
                    if (x_edge_ok && y_edge_ok) push_edge(lat.edges, i, wrap(y + 1) * L + wrap(x + 1));
                    break;
                case LatticeKind::hexagonal:
                    // Brick-wall embedding of the honeycomb: all horizontal
                    // edges, vertical edges on alternating parity.
                    if (x_edge_ok) push_edge(lat.edges, i, y * L + wrap(x + 1));
                    if (y_edge_ok && (x + y) % 2 == 0) push_edge(lat.edges, i, wrap(y + 1) * L + x);
                    break;
            }
        }
    }

    std::sort(lat.edges.begin(), lat.edges.end(),
              [](const Edge& l, const Edge& r) { return l.a != r.a ? l.a < r.a : l.b < r.b; });
    return lat;
}

std::vector<std::uint8_t> draw_active_mask(std::uint32_t n_nodes, double prob, std::uint64_t seed) {
    std::vector<std::uint8_t> mask(n_nodes, 0);
    Rng rng(seed);
    for (std::uint32_t i = 0; i < n_nodes; ++i) {
        mask[i] = rng.next_double() < prob ? 1 : 0;
    }
    return mask;
}

Lattice dilute_sites(const Lattice& lattice, double q, std::uint64_t seed) {
    if (q < 0.0 || q > 1.0) {
        throw std::invalid_argument("site yield q must be in [0, 1]");
    }
    if (q == 1.0) return lattice;

    Lattice out = lattice;
    out.active = draw_active_mask(lattice.n_nodes, q, seed);
    if (!lattice.active.empty()) {
        for (std::uint32_t i = 0; i < lattice.n_nodes; ++i) {
            out.active[i] = out.active[i] & lattice.active[i];
        }
    }
    out.n_active = 0;
    for (std::uint32_t i = 0; i < out.n_nodes; ++i) out.n_active += out.active[i];

    out.edges.clear();
    for (const Edge& e : lattice.edges) {
        if (out.active[e.a] && out.active[e.b]) out.edges.push_back(e);
    }
    return out;
}

std::string serialize_edge_list(const Lattice& lattice) {
    std::ostringstream os;
    os << to_string(lattice.geometry.kind) << ' ' << lattice.L << ' ' << lattice.n_nodes << ' '
       << lattice.edges.size() << ' ' << to_string(lattice.boundary) << '\n';
    for (const Edge& e : lattice.edges) {
        os << e.a << ' ' << e.b << '\n';
    }
    return os.str();
}

}  // namespace percsim
