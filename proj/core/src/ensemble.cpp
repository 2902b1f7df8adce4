#include "percsim/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "percsim/rng.hpp"

namespace percsim {

void parallel_replicas(int replicas, int workers, const std::function<void(int)>& body) {
    if (replicas <= 0) throw std::invalid_argument("parallel_replicas needs replicas >= 1");
    if (workers < 1) throw std::invalid_argument("parallel_replicas needs workers >= 1");
    if (workers > replicas) workers = replicas;
    if (workers == 1) {
        for (int r = 0; r < replicas; ++r) body(r);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto drain = [&] {
        for (;;) {
            const int r = next.fetch_add(1, std::memory_order_relaxed);
            if (r >= replicas) return;
            try {
                body(r);
            } catch (...) {
                {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
                next.store(replicas, std::memory_order_relaxed);  // stop claiming work
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

SweepGraph SweepStorage::view() const {
    SweepGraph g;
    g.n_nodes = n_nodes;
    g.n_active = n_active;
    g.L = L;
    g.periodic = periodic;
    if (owns) {
        g.edges = owned_edges;
        if (!owned_vecs.empty()) g.vecs = owned_vecs;
        if (!owned_active.empty()) g.active = &owned_active;
    } else {
        g.edges = shared_edges;
        g.active = shared_active;
    }
    return g;
}

SweepStorage storage_of(const Lattice& lattice) {
    SweepStorage st;
    st.owns = false;
    st.shared_edges = lattice.edges;
    st.shared_active = lattice.active.empty() ? nullptr : &lattice.active;
    st.n_nodes = lattice.n_nodes;
    st.n_active = lattice.n_active;
    st.L = lattice.L;
    st.periodic = lattice.boundary == Boundary::periodic;
    return st;
}

SweepStorage storage_of(Lattice&& lattice) {
    SweepStorage st;
    st.owned_edges = std::move(lattice.edges);
    st.owned_active = std::move(lattice.active);
    st.n_nodes = lattice.n_nodes;
    st.n_active = lattice.n_active;
    st.L = lattice.L;
    st.periodic = lattice.boundary == Boundary::periodic;
    return st;
}

SweepStorage storage_of(ContractedGraph&& graph) {
    SweepStorage st;
    st.owned_edges = std::move(graph.edges);
    st.owned_vecs = std::move(graph.vecs);
    st.n_nodes = graph.n_nodes;
    st.n_active = static_cast<std::uint32_t>(graph.active_nodes.size());
    st.L = graph.L;
    st.periodic = true;
    return st;
}

CanonicalCurve ensemble_run(const GraphFactory& factory, std::span<const double> p_grid,
                            std::uint32_t n_norm, const EnsembleOptions& options) {
    if (p_grid.empty()) throw std::invalid_argument("ensemble_run needs a non-empty p grid");
    if (n_norm == 0) throw std::invalid_argument("ensemble_run needs n_norm >= 1");
    const int replicas = options.replicas;
    if (replicas <= 0) throw std::invalid_argument("ensemble_run needs replicas >= 1");

    const std::size_t grid = p_grid.size();
    std::vector<double> f(static_cast<std::size_t>(replicas) * grid, 0.0);
    std::vector<double> wrap(static_cast<std::size_t>(replicas) * grid, 0.0);
    std::vector<std::uint8_t> detectable(static_cast<std::size_t>(replicas), 0);

    parallel_replicas(replicas, options.workers, [&](int r) {
        SweepStorage st = factory(r);
        const MicroCurve mc =
            run_sweep(st.view(), derive_seed(options.base_seed, r, SeedStream::bond_order));
        double* frow = f.data() + static_cast<std::size_t>(r) * grid;
        double* wrow = wrap.data() + static_cast<std::size_t>(r) * grid;
        detectable[static_cast<std::size_t>(r)] = mc.wrap_detectable ? 1 : 0;
        for (std::size_t j = 0; j < grid; ++j) {
            const BinomialWindow win = binomial_window(mc.m_edges, p_grid[j]);
            frow[j] = win.expectation(mc.lcc) / static_cast<double>(n_norm);
            wrow[j] = mc.wrap_bond ? win.survival(*mc.wrap_bond) : 0.0;
        }
    });

    CanonicalCurve out;
    out.p.assign(p_grid.begin(), p_grid.end());
    out.f_mean.assign(grid, 0.0);
    out.f_stderr.assign(grid, 0.0);
    out.wrap_prob.assign(grid, 0.0);
    out.n_norm = n_norm;
    out.replicas = replicas;
    out.wrap_available = true;
    for (int r = 0; r < replicas; ++r) {
        out.wrap_available = out.wrap_available && detectable[static_cast<std::size_t>(r)] != 0;
    }

    for (std::size_t j = 0; j < grid; ++j) {
        double sum = 0.0;
        double wsum = 0.0;
        for (int r = 0; r < replicas; ++r) {
            sum += f[static_cast<std::size_t>(r) * grid + j];
            wsum += wrap[static_cast<std::size_t>(r) * grid + j];
        }
        const double mean = sum / replicas;
        out.f_mean[j] = mean;
        out.wrap_prob[j] = wsum / replicas;
        if (replicas > 1) {
            double ss = 0.0;
            for (int r = 0; r < replicas; ++r) {
                const double d = f[static_cast<std::size_t>(r) * grid + j] - mean;
                ss += d * d;
            }
            out.f_stderr[j] = std::sqrt(ss / (static_cast<double>(replicas) * (replicas - 1)));
        }
    }
    return out;
}

CanonicalCurve ensemble_run(const Lattice& lattice, std::span<const double> p_grid,
                            const EnsembleOptions& options) {
    const GraphFactory factory = [&lattice](int) { return storage_of(lattice); };
    return ensemble_run(factory, p_grid, lattice.n_active, options);
}

}  // namespace percsim
