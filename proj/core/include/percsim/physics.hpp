#pragma once

#include <optional>
#include <string_view>

#include "percsim/lattice.hpp"

namespace percsim {

/// Photon-collection scheme presets; custom takes explicit p0/t0.
enum class Scheme { bullseye_sil, waveguide, cavity, custom };

const char* to_string(Scheme scheme);
std::optional<Scheme> scheme_from_string(std::string_view name);

/// Device-level entanglement parameters. p0 is the per-attempt Bell
/// success probability, t0 the attempt period in seconds, eta the photon
/// efficiency when known (then p0 = eta^2 / 2). per_hop_loss is reserved
/// for length-dependent bonds on contracted graphs; at the default 1.0
/// every bond succeeds with the same p0 regardless of hop count.
struct PhysicalParams {
    double p0 = 0.0;
    double t0 = 0.0;
    std::optional<double> eta;
    Scheme scheme = Scheme::custom;
    double per_hop_loss = 1.0;
};

/// Throws std::invalid_argument unless 0 < p0 < 1, t0 > 0,
/// 0 < per_hop_loss <= 1, and p0 = eta^2/2 to 1e-12 relative when eta is
/// present.
void validate(const PhysicalParams& params);

/// Preset parameters: p0 = 5e-5 (bullseye_sil), 2e-4 (waveguide),
/// 5e-2 (cavity); t0 = 5 microseconds for all. Rejects Scheme::custom.
PhysicalParams scheme_params(Scheme scheme);

/// Validated custom parameters.
PhysicalParams custom_params(double p0, double t0, std::optional<double> eta = std::nullopt);

/// Probability that one bond exists after entangling for time t, when a
/// node serializes attempts round-robin over its d neighbors:
/// p = 1 - (1 - p0)^(t / (t0 d)). The exponent is continuous by default;
/// discrete_attempts floors it to whole per-neighbor attempts.
double bond_prob_from_time(double t, const PhysicalParams& params, int d,
                           bool discrete_attempts = false);

/// Time at which bond_prob_from_time reaches p_c:
/// t_c = t0 d ln(1 - p_c) / ln(1 - p0). Exact inverse of the continuous
/// bond_prob_from_time.
double time_to_threshold(double p_c, const PhysicalParams& params, int d);

/// Minimum time for percolation without feed-forward, over all graphs:
/// -t0 / ln(1 - p0). Attained in the limit of a degree-d Bethe lattice
/// (p_c = 1/(d-1)) as d grows.
double threshold_time_lower_bound(const PhysicalParams& params);

/// The degree-d Bethe-lattice bound t0 d ln(1 - 1/(d-1)) / ln(1 - p0);
/// decreasing in d and tending to threshold_time_lower_bound. Needs d >= 3.
double degree_threshold_time_bound(const PhysicalParams& params, int d);

/// Exactly known bond-percolation thresholds: square 1/2, triangular
/// 2 sin(pi/18), hexagonal 1 - 2 sin(pi/18).
double exact_bond_threshold(LatticeKind kind);

}  // namespace percsim
