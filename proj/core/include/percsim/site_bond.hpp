#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "percsim/lattice.hpp"
#include "percsim/physics.hpp"

namespace percsim {

/// One bisection iteration: the bracket entering the iteration and the
/// ensemble wrap probabilities at its ends. Kept so callers can audit the
/// invariant w_lo < 1/2 <= w_hi.
struct BisectionStep {
    double p_lo = 0.0;
    double p_hi = 1.0;
    double w_lo = 0.0;
    double w_hi = 1.0;
};

/// Minimum percolating bond probability at site yield q, and its time via
/// the device mapping. p_min/t_min are NaN when status is
/// "non_percolating" (q at or below the site threshold).
struct YieldCurvePoint {
    Geometry geometry;
    std::uint32_t L = 0;
    double q = 1.0;
    double p_min = 0.0;
    double p_min_stderr = 0.0;
    double t_min_seconds = 0.0;
    std::string status = "ok";  // "ok" | "non_percolating"
    std::vector<BisectionStep> bisection_trace;
};

struct YieldOptions {
    /// The wrap-probability criterion is evaluated at the largest entry;
    /// smaller entries are accepted for interface symmetry with
    /// estimate_threshold but not simulated.
    std::vector<std::uint32_t> sizes = {256};
    int replicas = 200;
    std::uint64_t base_seed = 1;
    double tolerance = 2e-3;  // final bisection bracket width in p
    PhysicalParams params = scheme_params(Scheme::waveguide);
    int workers = 1;
};

/// Smallest p with ensemble wrap probability >= 1/2 on site-diluted
/// lattices (fresh dilution per replica), found by bisection on the
/// binomially convolved wrap curve — one sweep per replica covers every
/// trial p. Needs 0 < q <= 1.
YieldCurvePoint min_bond_prob(Geometry geometry, double q, const YieldOptions& options);

/// min_bond_prob over an ascending q grid; each bisection warm-starts
/// from the previous point's upper bracket (p_min shrinks as q grows).
std::vector<YieldCurvePoint> yield_curve(Geometry geometry, std::span<const double> q_grid,
                                         const YieldOptions& options);

}  // namespace percsim
