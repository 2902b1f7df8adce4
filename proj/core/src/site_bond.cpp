#include "percsim/site_bond.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "percsim/convolve.hpp"
#include "percsim/ensemble.hpp"
#include "percsim/rng.hpp"
#include "percsim/sweep.hpp"

namespace percsim {

namespace {

/// Wrap onsets of one diluted ensemble: replica r's first-wrap bond count
/// and its own edge total (dilution changes M per replica).
struct DilutedOutcomes {
    std::vector<std::uint8_t> wrapped;
    std::vector<std::uint32_t> n_wrap;
    std::vector<std::uint64_t> m_edges;
    int replicas = 0;
    double frac_wrapped = 0.0;
};

DilutedOutcomes run_diluted(const Lattice& base, double q, int replicas,
                            std::uint64_t block_seed, int workers) {
    DilutedOutcomes out;
    out.replicas = replicas;
    out.wrapped.assign(static_cast<std::size_t>(replicas), 0);
    out.n_wrap.assign(static_cast<std::size_t>(replicas), 0);
    out.m_edges.assign(static_cast<std::size_t>(replicas), 0);
    parallel_replicas(replicas, workers, [&](int r) {
        const auto idx = static_cast<std::size_t>(r);
        const auto rep = static_cast<std::uint64_t>(r);
        Lattice diluted = dilute_sites(base, q, derive_seed(block_seed, rep, SeedStream::dilution));
        if (diluted.n_active == 0 || diluted.edges.empty()) return;
        const SweepStorage st = storage_of(std::move(diluted));
        SweepOptions opt;
        opt.record_curve = false;
        opt.stop_after_wrap = true;
        const MicroCurve mc =
            run_sweep(st.view(), derive_seed(block_seed, rep, SeedStream::bond_order), opt);
        out.m_edges[idx] = mc.m_edges;
        if (mc.wrap_bond) {
            out.wrapped[idx] = 1;
            out.n_wrap[idx] = *mc.wrap_bond;
        }
    });
    int wrapped = 0;
    for (std::uint8_t w : out.wrapped) wrapped += w;
    out.frac_wrapped = static_cast<double>(wrapped) / static_cast<double>(replicas);
    return out;
}

/// Ensemble probability that a wrapping cluster exists at bond
/// probability p; monotone increasing in p replica by replica.
double wrap_probability(const DilutedOutcomes& oc, double p) {
    double sum = 0.0;
    for (std::size_t r = 0; r < oc.wrapped.size(); ++r) {
        if (!oc.wrapped[r]) continue;
        sum += binomial_window(oc.m_edges[r], p).survival(oc.n_wrap[r]);
    }
    return sum / static_cast<double>(oc.replicas);
}

/// Standard error of p_min: the wrap-probability sampling error at p_min
/// divided by the local slope, plus half the bisection bracket, in
/// quadrature.
double propagate_stderr(const DilutedOutcomes& oc, double p_min, double tolerance) {
    const double mean = wrap_probability(oc, p_min);
    double ss = 0.0;
    for (std::size_t r = 0; r < oc.wrapped.size(); ++r) {
        const double s =
            oc.wrapped[r] ? binomial_window(oc.m_edges[r], p_min).survival(oc.n_wrap[r]) : 0.0;
        const double d = s - mean;
        ss += d * d;
    }
    const int n = oc.replicas;
    const double w_sd = n > 1 ? std::sqrt(ss / (static_cast<double>(n) * (n - 1))) : 0.0;
    const double delta = std::max(tolerance, 1e-3);
    const double lo = std::max(0.0, p_min - delta);
    const double hi = std::min(1.0, p_min + delta);
    const double slope = (wrap_probability(oc, hi) - wrap_probability(oc, lo)) / (hi - lo);
    const double statistical = slope > 0.0 ? w_sd / slope : tolerance;
    return std::hypot(statistical, tolerance / 2.0);
}

YieldCurvePoint min_bond_prob_impl(Geometry geometry, double q, const YieldOptions& options,
                                   double warm_hi) {
    if (!(q > 0.0 && q <= 1.0)) {
        throw std::invalid_argument("site yield must lie in (0, 1]");
    }
    if (options.sizes.empty()) throw std::invalid_argument("need at least one size");
    if (options.replicas <= 0) throw std::invalid_argument("need replicas >= 1");
    if (!(options.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    validate(options.params);

    const std::uint32_t L = *std::max_element(options.sizes.begin(), options.sizes.end());
    const Lattice base = build_lattice(geometry, L, Boundary::periodic);
    const std::uint64_t block_seed =
        derive_block_seed(options.base_seed, std::bit_cast<std::uint64_t>(q));
    const DilutedOutcomes oc =
        run_diluted(base, q, options.replicas, block_seed, options.workers);

    YieldCurvePoint point;
    point.geometry = geometry;
    point.L = L;
    point.q = q;
    if (oc.frac_wrapped < 0.5) {
        point.status = "non_percolating";
        point.p_min = std::numeric_limits<double>::quiet_NaN();
        point.p_min_stderr = std::numeric_limits<double>::quiet_NaN();
        point.t_min_seconds = std::numeric_limits<double>::quiet_NaN();
        return point;
    }

    double lo = 0.0;
    double w_lo = 0.0;  // no bonds, no wrap
    double hi = std::clamp(warm_hi, 0.0, 1.0);
    double w_hi = hi < 1.0 ? wrap_probability(oc, hi) : oc.frac_wrapped;
    if (!(w_hi >= 0.5)) {  // warm bracket too tight for this ensemble
        hi = 1.0;
        w_hi = oc.frac_wrapped;
    }
    while (hi - lo > options.tolerance) {
        point.bisection_trace.push_back({lo, hi, w_lo, w_hi});
        const double mid = 0.5 * (lo + hi);
        const double w_mid = wrap_probability(oc, mid);
        if (w_mid >= 0.5) {
            hi = mid;
            w_hi = w_mid;
        } else {
            lo = mid;
            w_lo = w_mid;
        }
    }
    point.bisection_trace.push_back({lo, hi, w_lo, w_hi});
    point.p_min = 0.5 * (lo + hi);
    point.p_min_stderr = propagate_stderr(oc, point.p_min, options.tolerance);
    point.t_min_seconds = time_to_threshold(point.p_min, options.params, geometry.degree);
    return point;
}

}  // namespace

YieldCurvePoint min_bond_prob(Geometry geometry, double q, const YieldOptions& options) {
    return min_bond_prob_impl(geometry, q, options, 1.0);
}

std::vector<YieldCurvePoint> yield_curve(Geometry geometry, std::span<const double> q_grid,
                                         const YieldOptions& options) {
    if (q_grid.empty()) throw std::invalid_argument("yield_curve needs a non-empty q grid");
    for (std::size_t i = 1; i < q_grid.size(); ++i) {
        if (q_grid[i] < q_grid[i - 1]) {
            throw std::invalid_argument("q grid must be sorted ascending");
        }
    }
    std::vector<YieldCurvePoint> points;
    points.reserve(q_grid.size());
    double warm_hi = 1.0;
    for (double q : q_grid) {
        points.push_back(min_bond_prob_impl(geometry, q, options, warm_hi));
        const YieldCurvePoint& last = points.back();
        warm_hi = last.status == "ok" ? last.bisection_trace.back().p_hi : 1.0;
    }
    return points;
}

}  // namespace percsim
