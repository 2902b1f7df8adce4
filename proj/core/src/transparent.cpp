#include "percsim/transparent.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "percsim/rng.hpp"

namespace percsim {

void validate(const TransparentConfig& config) {
    if (config.L < 3) throw std::invalid_argument("transparent runs need L >= 3");
    if (!(config.epsilon > 0.0 && config.epsilon <= 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    }
    if (!(config.site_yield > 0.0 && config.site_yield <= 1.0)) {
        throw std::invalid_argument("site yield must lie in (0, 1]");
    }
    const double n = static_cast<double>(config.L) * config.L;
    if (config.epsilon * config.site_yield * n < 100.0) {
        throw std::invalid_argument("need epsilon * yield * N >= 100 live nodes in expectation");
    }
    if (config.replicas <= 0) throw std::invalid_argument("need replicas >= 1");
    if (config.p_grid.empty()) throw std::invalid_argument("need a non-empty p grid");
    validate(config.params);
}

GraphFactory transparent_factory(const Lattice& lattice, double live_prob, Pairing pairing,
                                 std::uint64_t base_seed) {
    if (!(live_prob > 0.0 && live_prob <= 1.0)) {
        throw std::invalid_argument("live probability must lie in (0, 1]");
    }
    const Lattice* src = &lattice;
    return [src, live_prob, pairing, base_seed](int replica) {
        const std::vector<std::uint8_t> mask = draw_active_mask(
            src->n_nodes, live_prob,
            derive_seed(base_seed, static_cast<std::uint64_t>(replica), SeedStream::dilution));
        return storage_of(contract_with_mask(*src, mask, pairing));
    };
}

CanonicalCurve transparent_curve(const TransparentConfig& config) {
    validate(config);
    const Lattice lattice = build_lattice(make_geometry(LatticeKind::square), config.L,
                                          Boundary::periodic);
    const GraphFactory factory = transparent_factory(
        lattice, config.epsilon * config.site_yield, config.pairing, config.base_seed);
    EnsembleOptions opts;
    opts.replicas = config.replicas;
    opts.base_seed = config.base_seed;
    opts.workers = config.workers;
    return ensemble_run(factory, config.p_grid, lattice.n_nodes, opts);
}

EpsilonThresholdTable min_threshold_vs_epsilon(std::uint32_t L, std::span<const double> eps_grid,
                                               int replicas, std::uint64_t base_seed,
                                               int workers) {
    if (eps_grid.empty()) throw std::invalid_argument("need a non-empty epsilon grid");
    const double n = static_cast<double>(L) * L;
    for (double eps : eps_grid) {
        if (!(eps > 0.0 && eps <= 1.0) || eps * n < 100.0) {
            throw std::invalid_argument("every epsilon needs epsilon * N >= 100");
        }
    }
    const Lattice lattice = build_lattice(make_geometry(LatticeKind::square), L,
                                          Boundary::periodic);
    EpsilonThresholdTable table;
    table.L = L;
    table.entries.reserve(eps_grid.size());
    double min_p_c = std::numeric_limits<double>::infinity();
    for (double eps : eps_grid) {
        const std::uint64_t block_seed =
            derive_block_seed(base_seed, std::bit_cast<std::uint64_t>(eps));
        const GraphFactory factory =
            transparent_factory(lattice, eps, Pairing::straight_through, block_seed);
        SizeEstimate est = wrap_onset_stats(factory, L, replicas, block_seed, workers);
        EpsilonThresholdEntry entry;
        entry.epsilon = eps;
        entry.estimate = combine_size_estimates({std::move(est)});
        if (entry.estimate.status == "ok") min_p_c = std::min(min_p_c, entry.estimate.p_hat);
        table.entries.push_back(std::move(entry));
    }
    table.min_p_c = min_p_c;
    return table;
}

double crossing_threshold(const CrossingConfig& config) {
    if (config.L < 6 || config.L % 2 != 0) {
        throw std::invalid_argument("crossing needs an even L >= 6");
    }
    if (!(config.epsilon > 0.0 && config.epsilon <= 1.0)) {
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    }
    if (config.replicas <= 0) throw std::invalid_argument("need replicas >= 1");
    if (!(config.p_lo >= 0.0 && config.p_hi <= 1.0 && config.p_lo < config.p_hi)) {
        throw std::invalid_argument("need 0 <= p_lo < p_hi <= 1");
    }
    if (config.p_points < 2) throw std::invalid_argument("need at least two grid points");

    std::vector<double> grid(static_cast<std::size_t>(config.p_points));
    for (int i = 0; i < config.p_points; ++i) {
        grid[static_cast<std::size_t>(i)] =
            config.p_lo + (config.p_hi - config.p_lo) * i / (config.p_points - 1);
    }
    auto scaled_curve = [&](std::uint32_t size) {
        const Lattice lattice = build_lattice(make_geometry(LatticeKind::square), size,
                                              Boundary::periodic);
        const GraphFactory factory =
            transparent_factory(lattice, config.epsilon, config.pairing, config.base_seed);
        EnsembleOptions opts;
        opts.replicas = config.replicas;
        opts.base_seed = config.base_seed;
        opts.workers = config.workers;
        CanonicalCurve curve = ensemble_run(factory, grid, lattice.n_nodes, opts);
        const double scale = std::pow(static_cast<double>(size), 5.0 / 48.0);
        for (double& f : curve.f_mean) f *= scale;
        return curve;
    };
    const CanonicalCurve small = scaled_curve(config.L / 2);
    const CanonicalCurve large = scaled_curve(config.L);
    // Below threshold the smaller size sits above (its ceiling is closer);
    // the first sign change of large - small marks the crossing.
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double d0 = large.f_mean[i - 1] - small.f_mean[i - 1];
        const double d1 = large.f_mean[i] - small.f_mean[i];
        if (d0 < 0.0 && d1 >= 0.0) {
            return grid[i - 1] + (grid[i] - grid[i - 1]) * (-d0) / (d1 - d0);
        }
    }
    throw std::runtime_error("scaled LCC curves do not cross inside the scan window");
}

OptimalEpsilon optimal_epsilon(double t_budget, std::uint32_t L, const PhysicalParams& params,
                               int replicas, std::uint64_t base_seed, int workers) {
    if (!(t_budget > 0.0)) throw std::invalid_argument("time budget must be positive");
    if (L < 3) throw std::invalid_argument("optimal_epsilon needs L >= 3");
    if (replicas <= 0) throw std::invalid_argument("need replicas >= 1");
    validate(params);

    const Lattice lattice = build_lattice(make_geometry(LatticeKind::square), L,
                                          Boundary::periodic);
    const double n = static_cast<double>(lattice.n_nodes);
    const double eps_min = std::min(1.0, 100.0 / n);
    const double p = bond_prob_from_time(t_budget, params, 4);

    OptimalEpsilon out;
    out.p = p;
    const double p_grid[1] = {p};
    EnsembleOptions opts;
    opts.replicas = replicas;
    opts.base_seed = base_seed;
    opts.workers = workers;
    auto eval = [&](double eps) {
        // One shared seed for every epsilon: masks are coupled (a node live
        // at small epsilon is live at any larger one), which smooths the
        // objective for the bracket search.
        const GraphFactory factory =
            transparent_factory(lattice, eps, Pairing::straight_through, base_seed);
        const CanonicalCurve curve = ensemble_run(factory, p_grid, lattice.n_nodes, opts);
        out.evaluations.emplace_back(eps, curve.f_mean[0]);
        return curve.f_mean[0];
    };

    const double invphi = 0.6180339887498949;
    double a = eps_min;
    double b = 1.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    while (b - a > 0.02) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = eval(d);
        }
    }
    double best_eps = fc >= fd ? c : d;
    double best_f = std::max(fc, fd);
    // The ceiling can push the optimum to the boundary; check it exactly.
    const double f_one = eval(1.0);
    if (f_one >= best_f) {
        best_eps = 1.0;
        best_f = f_one;
    }
    out.epsilon = best_eps;
    out.f_lcc = best_f;
    out.sub_critical = best_f < 0.05 * best_eps;
    return out;
}

}  // namespace percsim
