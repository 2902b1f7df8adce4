#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "percsim/ensemble.hpp"
#include "percsim/lattice.hpp"

namespace percsim {

/// Wrap-onset statistics at one lattice size: the occupied fraction at the
/// first wrapping event, averaged over the replicas that wrapped. Its mean
/// tends to the percolation threshold as L grows.
struct SizeEstimate {
    std::uint32_t L = 0;
    double p_hat = 0.0;      // NaN when no replica wrapped
    double std_error = 0.0;
    double frac_wrapped = 0.0;
    int replicas = 0;
};

struct ThresholdEstimate {
    double p_hat = 0.0;
    /// Statistical error at the largest size and the spread across sizes,
    /// combined in quadrature.
    double sigma = 0.0;
    std::vector<SizeEstimate> per_size;  // ascending L
    std::string criterion = "wrap_onset_mean";
    std::string status = "ok";  // "ok" | "non_percolating"
};

/// Bond-onset statistics over factory-built replicas; L is recorded as
/// given. Replica r sweeps with the bond_order stream of base_seed and
/// stops at its first wrap.
SizeEstimate wrap_onset_stats(const GraphFactory& factory, std::uint32_t L, int replicas,
                              std::uint64_t base_seed, int workers = 1);

/// Combine per-size onset estimates: the largest size gives the point
/// estimate, the spread across sizes the systematic part of sigma. Status
/// becomes non_percolating when fewer than half the replicas at the
/// largest size wrapped.
ThresholdEstimate combine_size_estimates(std::vector<SizeEstimate> per_size);

/// Bond-percolation threshold of a regular geometry from wrap-onset means
/// at two or more sizes (periodic boundaries).
ThresholdEstimate estimate_threshold(Geometry geometry, std::span<const std::uint32_t> sizes,
                                     int replicas, std::uint64_t base_seed, int workers = 1);

/// Site-percolation threshold with all bonds present: the occupied-site
/// fraction at first wrap, combined as in estimate_threshold.
struct SiteThresholdEstimate {
    double q_hat = 0.0;
    double sigma = 0.0;
    std::vector<SizeEstimate> per_size;
    std::string criterion = "site_wrap_onset_mean";
    std::string status = "ok";
};

SiteThresholdEstimate estimate_site_threshold(Geometry geometry,
                                              std::span<const std::uint32_t> sizes, int replicas,
                                              std::uint64_t base_seed, int workers = 1);

}  // namespace percsim
