#include "percsim/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "percsim/rng.hpp"
#include "percsim/sweep.hpp"

namespace percsim {

namespace {

/// Mean / standard error over onsets >= 0 (negative = replica never
/// wrapped), accumulated in replica order.
SizeEstimate reduce_onsets(const std::vector<double>& onset, std::uint32_t L, int replicas) {
    SizeEstimate est;
    est.L = L;
    est.replicas = replicas;
    int wrapped = 0;
    double sum = 0.0;
    for (double v : onset) {
        if (v >= 0.0) {
            ++wrapped;
            sum += v;
        }
    }
    est.frac_wrapped = static_cast<double>(wrapped) / static_cast<double>(replicas);
    if (wrapped == 0) {
        est.p_hat = std::numeric_limits<double>::quiet_NaN();
        est.std_error = std::numeric_limits<double>::quiet_NaN();
        return est;
    }
    const double mean = sum / wrapped;
    est.p_hat = mean;
    if (wrapped > 1) {
        double ss = 0.0;
        for (double v : onset) {
            if (v >= 0.0) {
                const double d = v - mean;
                ss += d * d;
            }
        }
        est.std_error = std::sqrt(ss / (static_cast<double>(wrapped) * (wrapped - 1)));
    }
    return est;
}

}  // namespace

SizeEstimate wrap_onset_stats(const GraphFactory& factory, std::uint32_t L, int replicas,
                              std::uint64_t base_seed, int workers) {
    if (replicas <= 0) throw std::invalid_argument("wrap_onset_stats needs replicas >= 1");
    std::vector<double> onset(static_cast<std::size_t>(replicas), -1.0);
    parallel_replicas(replicas, workers, [&](int r) {
        SweepStorage st = factory(r);
        SweepOptions opt;
        opt.record_curve = false;
        opt.stop_after_wrap = true;
        const MicroCurve mc = run_sweep(
            st.view(), derive_seed(base_seed, static_cast<std::uint64_t>(r), SeedStream::bond_order),
            opt);
        if (!mc.wrap_detectable) {
            throw std::invalid_argument("wrap onset needs periodic boundaries");
        }
        if (mc.wrap_bond && mc.m_edges > 0) {
            onset[static_cast<std::size_t>(r)] =
                static_cast<double>(*mc.wrap_bond) / static_cast<double>(mc.m_edges);
        }
    });
    return reduce_onsets(onset, L, replicas);
}

ThresholdEstimate combine_size_estimates(std::vector<SizeEstimate> per_size) {
    if (per_size.empty()) {
        throw std::invalid_argument("combine_size_estimates needs at least one size");
    }
    std::sort(per_size.begin(), per_size.end(),
              [](const SizeEstimate& a, const SizeEstimate& b) { return a.L < b.L; });

    ThresholdEstimate out;
    out.per_size = std::move(per_size);
    const SizeEstimate& top = out.per_size.back();
    out.p_hat = top.p_hat;
    if (top.frac_wrapped < 0.5) {
        out.status = "non_percolating";
    }
    double lo = top.p_hat;
    double hi = top.p_hat;
    for (const SizeEstimate& est : out.per_size) {
        if (est.frac_wrapped < 0.5 || std::isnan(est.p_hat)) continue;
        lo = std::min(lo, est.p_hat);
        hi = std::max(hi, est.p_hat);
    }
    const double spread = hi - lo;
    out.sigma = std::sqrt(top.std_error * top.std_error + spread * spread);
    return out;
}

ThresholdEstimate estimate_threshold(Geometry geometry, std::span<const std::uint32_t> sizes,
                                     int replicas, std::uint64_t base_seed, int workers) {
    if (sizes.size() < 2) {
        throw std::invalid_argument("estimate_threshold needs at least two sizes");
    }
    std::vector<std::uint32_t> sorted(sizes.begin(), sizes.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<SizeEstimate> per_size;
    per_size.reserve(sorted.size());
    for (std::uint32_t L : sorted) {
        const Lattice lattice = build_lattice(geometry, L, Boundary::periodic);
        const GraphFactory factory = [&lattice](int) { return storage_of(lattice); };
        per_size.push_back(wrap_onset_stats(factory, L, replicas, derive_block_seed(base_seed, L),
                                            workers));
    }
    return combine_size_estimates(std::move(per_size));
}

SiteThresholdEstimate estimate_site_threshold(Geometry geometry,
                                              std::span<const std::uint32_t> sizes, int replicas,
                                              std::uint64_t base_seed, int workers) {
    if (sizes.empty()) {
        throw std::invalid_argument("estimate_site_threshold needs at least one size");
    }
    if (replicas <= 0) {
        throw std::invalid_argument("estimate_site_threshold needs replicas >= 1");
    }
    std::vector<std::uint32_t> sorted(sizes.begin(), sizes.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<SizeEstimate> per_size;
    per_size.reserve(sorted.size());
    for (std::uint32_t L : sorted) {
        const Lattice lattice = build_lattice(geometry, L, Boundary::periodic);
        const SiteAdjacency adjacency = SiteAdjacency::build(lattice);
        const std::uint64_t block_seed = derive_block_seed(base_seed, L);
        std::vector<double> onset(static_cast<std::size_t>(replicas), -1.0);
        parallel_replicas(replicas, workers, [&](int r) {
            const SiteSweepResult res = run_site_sweep(
                lattice, adjacency,
                derive_seed(block_seed, static_cast<std::uint64_t>(r), SeedStream::site_order));
            if (res.wrap_site) {
                onset[static_cast<std::size_t>(r)] =
                    static_cast<double>(*res.wrap_site) / static_cast<double>(res.n_nodes);
            }
        });
        per_size.push_back(reduce_onsets(onset, L, replicas));
    }

    ThresholdEstimate combined = combine_size_estimates(std::move(per_size));
    SiteThresholdEstimate out;
    out.q_hat = combined.p_hat;
    out.sigma = combined.sigma;
    out.per_size = std::move(combined.per_size);
    out.status = combined.status;
    return out;
}

}  // namespace percsim
