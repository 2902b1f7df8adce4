#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "percsim/contracted.hpp"
#include "percsim/convolve.hpp"
#include "percsim/ensemble.hpp"
#include "percsim/lattice.hpp"
#include "percsim/physics.hpp"
#include "percsim/threshold.hpp"

namespace percsim {

/// Ensemble configuration for transparent-node runs on an L x L square
/// torus. A node is live (active and functional) with probability
/// epsilon * site_yield; faulty sites behave exactly like transparent
/// ones, so yield folds into the transparent fraction.
struct TransparentConfig {
    std::uint32_t L = 0;
    double epsilon = 1.0;
    double site_yield = 1.0;
    int replicas = 1;
    std::vector<double> p_grid;
    PhysicalParams params = scheme_params(Scheme::waveguide);
    Pairing pairing = Pairing::straight_through;
    std::uint64_t base_seed = 1;
    int workers = 1;
};

/// Throws std::invalid_argument unless the live fraction is positive with
/// an expected live-node count of at least 100 (1/N << epsilon), the grid
/// is non-empty, and counts are positive.
void validate(const TransparentConfig& config);

/// Factory producing replica-specific contracted graphs: replica r draws
/// its live mask from the dilution stream of base_seed, then contracts.
/// The lattice must outlive the factory and must be square periodic.
GraphFactory transparent_factory(const Lattice& lattice, double live_prob, Pairing pairing,
                                 std::uint64_t base_seed);

/// Canonical curve over transparent-node replicas, normalized by the
/// TOTAL node count N (not live nodes), so the large-p ceiling is the
/// live fraction.
CanonicalCurve transparent_curve(const TransparentConfig& config);

/// Bond threshold of the contracted architecture for each epsilon in the
/// grid, via the wrap-onset estimator at one size L (winding stays
/// well-defined through the hop vectors on contracted edges).
struct EpsilonThresholdEntry {
    double epsilon = 1.0;
    ThresholdEstimate estimate;
};

struct EpsilonThresholdTable {
    std::uint32_t L = 0;
    std::vector<EpsilonThresholdEntry> entries;  // grid order
    double min_p_c = 0.0;                        // smallest p_hat among ok entries
};

EpsilonThresholdTable min_threshold_vs_epsilon(std::uint32_t L, std::span<const double> eps_grid,
                                               int replicas, std::uint64_t base_seed,
                                               int workers = 1);

/// Threshold of the contracted architecture from the finite-size crossing
/// of the scaled largest-cluster fraction f_LCC * L^(5/48) between sizes
/// L/2 and L (5/48 is the two-dimensional percolation beta/nu). Sparse
/// architectures defeat the wrap-onset estimator: a winding cycle closes
/// after only ~epsilon * L giant hops, so onset drifts far below the bulk
/// threshold until the per-row occupancy reaches several hundred. The
/// crossing tracks bulk cluster growth on the live-node scale
/// L * sqrt(epsilon) instead; on the undiluted lattice it reproduces
/// p_c = 0.5000 already at L = 512.
struct CrossingConfig {
    std::uint32_t L = 0;  // larger of the two sizes; the partner is L / 2
    double epsilon = 1.0;
    int replicas = 1;
    double p_lo = 0.0;  // scan window; must bracket the crossing
    double p_hi = 1.0;
    int p_points = 25;
    Pairing pairing = Pairing::straight_through;
    std::uint64_t base_seed = 1;
    int workers = 1;
};

/// Linearly interpolated crossing point. Throws std::invalid_argument on
/// bad parameters and std::runtime_error when the scaled curves do not
/// cross inside [p_lo, p_hi].
double crossing_threshold(const CrossingConfig& config);

/// Result of searching epsilon for the largest mean LCC at a fixed time
/// budget. sub_critical marks budgets too small for percolation at any
/// epsilon: the best LCC stays below 5% of its own ceiling.
struct OptimalEpsilon {
    double epsilon = 1.0;
    double f_lcc = 0.0;  // achieved mean LCC fraction of total N
    double p = 0.0;      // bond probability implied by the budget
    bool sub_critical = false;
    std::vector<std::pair<double, double>> evaluations;  // (epsilon, f_lcc) in search order
};

/// Golden-section search of epsilon in [100/N, 1] maximizing the
/// ensemble-mean LCC fraction at p = bond_prob_from_time(t_budget, params,
/// 4), to a bracket width of 0.02. All evaluations share one base seed
/// (common random numbers), so the comparison is deterministic.
OptimalEpsilon optimal_epsilon(double t_budget, std::uint32_t L, const PhysicalParams& params,
                               int replicas, std::uint64_t base_seed = 1, int workers = 1);

}  // namespace percsim
