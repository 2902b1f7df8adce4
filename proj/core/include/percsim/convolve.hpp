#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "percsim/sweep.hpp"

namespace percsim {

/// Binomial(M, p) probability mass over a window around the mean, wide
/// enough (mean +- 8 sigma) that the captured mass is >= 1 - 1e-10.
/// Computed by anchoring log pmf at the modal count and recurring outward
/// with ratio factors, which stays finite at M ~ 1e7 where factorials
/// overflow.
struct BinomialWindow {
    std::uint64_t m = 0;
    double p = 0.0;
    std::uint64_t lo = 0;        // inclusive
    std::uint64_t hi = 0;        // inclusive
    std::vector<double> pmf;     // pmf[i] = P(X = lo + i)
    std::vector<double> suffix;  // suffix[i] = sum of pmf[i..]
    double mass = 0.0;           // sum of pmf

    /// Expectation of counts[n] under X ~ Binomial(m, p). counts must have
    /// m + 1 entries.
    double expectation(std::span<const std::uint32_t> counts) const;

    /// P(X >= k). Outside the window this returns 0 or 1; the error is
    /// bounded by the neglected tail mass.
    double survival(std::uint64_t k) const;
};

BinomialWindow binomial_window(std::uint64_t m, double p);

/// Canonical (fixed-p) observables obtained from microcanonical sweeps by
/// binomial convolution, averaged over replicas.
struct CanonicalCurve {
    std::vector<double> p;
    std::vector<double> f_mean;    // largest-component fraction of n_norm
    std::vector<double> f_stderr;
    std::vector<double> wrap_prob;
    std::uint32_t n_norm = 0;
    int replicas = 0;
    bool wrap_available = false;
};

/// Convolve a single completed sweep to the canonical ensemble on p_grid.
/// Fractions are normalized by n_norm (pass curve.n_nodes for the plain
/// lattice convention).
CanonicalCurve convolve_binomial(const MicroCurve& curve, std::span<const double> p_grid,
                                 std::uint32_t n_norm);

}  // namespace percsim
