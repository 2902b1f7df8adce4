#include "percsim/physics.hpp"

#include <cmath>
#include <stdexcept>

namespace percsim {

const char* to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::bullseye_sil: return "bullseye_sil";
        case Scheme::waveguide: return "waveguide";
        case Scheme::cavity: return "cavity";
        case Scheme::custom: return "custom";
    }
    return "?";
}

std::optional<Scheme> scheme_from_string(std::string_view name) {
    if (name == "bullseye_sil") return Scheme::bullseye_sil;
    if (name == "waveguide") return Scheme::waveguide;
    if (name == "cavity") return Scheme::cavity;
    if (name == "custom") return Scheme::custom;
    return std::nullopt;
}

void validate(const PhysicalParams& params) {
    if (!(params.p0 > 0.0 && params.p0 < 1.0)) {
        throw std::invalid_argument("p0 must lie in (0, 1)");
    }
    if (!(params.t0 > 0.0)) {
        throw std::invalid_argument("t0 must be positive");
    }
    if (!(params.per_hop_loss > 0.0 && params.per_hop_loss <= 1.0)) {
        throw std::invalid_argument("per-hop loss must lie in (0, 1]");
    }
    if (params.eta) {
        const double eta = *params.eta;
        if (!(eta > 0.0 && eta <= 1.0)) {
            throw std::invalid_argument("eta must lie in (0, 1]");
        }
        const double implied = eta * eta / 2.0;
        if (std::abs(params.p0 - implied) > 1e-12 * implied) {
            throw std::invalid_argument("p0 must equal eta^2 / 2");
        }
    }
}

PhysicalParams scheme_params(Scheme scheme) {
    PhysicalParams params;
    params.t0 = 5e-6;
    params.scheme = scheme;
    switch (scheme) {
        case Scheme::bullseye_sil: params.p0 = 5e-5; break;
        case Scheme::waveguide: params.p0 = 2e-4; break;
        case Scheme::cavity: params.p0 = 5e-2; break;
        case Scheme::custom:
            throw std::invalid_argument("custom scheme needs explicit p0 and t0");
    }
    validate(params);
    return params;
}

PhysicalParams custom_params(double p0, double t0, std::optional<double> eta) {
    PhysicalParams params;
    params.p0 = p0;
    params.t0 = t0;
    params.eta = eta;
    params.scheme = Scheme::custom;
    validate(params);
    return params;
}

double bond_prob_from_time(double t, const PhysicalParams& params, int d,
                           bool discrete_attempts) {
    validate(params);
    if (t < 0.0) throw std::invalid_argument("time must be non-negative");
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    double attempts = t / (params.t0 * static_cast<double>(d));
    if (discrete_attempts) attempts = std::floor(attempts);
    // 1 - (1-p0)^attempts via expm1/log1p, accurate for p0 ~ 1e-5.
    return -std::expm1(attempts * std::log1p(-params.p0));
}

double time_to_threshold(double p_c, const PhysicalParams& params, int d) {
    validate(params);
    if (!(p_c > 0.0 && p_c < 1.0)) throw std::invalid_argument("p_c must lie in (0, 1)");
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    return params.t0 * static_cast<double>(d) * std::log1p(-p_c) / std::log1p(-params.p0);
}

double threshold_time_lower_bound(const PhysicalParams& params) {
    validate(params);
    return -params.t0 / std::log1p(-params.p0);
}

double degree_threshold_time_bound(const PhysicalParams& params, int d) {
    validate(params);
    if (d < 3) throw std::invalid_argument("degree bound needs d >= 3");
    const double p_bethe = 1.0 / (static_cast<double>(d) - 1.0);
    return params.t0 * static_cast<double>(d) * std::log1p(-p_bethe) / std::log1p(-params.p0);
}

double exact_bond_threshold(LatticeKind kind) {
    const double pi = std::acos(-1.0);
    switch (kind) {
        case LatticeKind::square: return 0.5;
        case LatticeKind::triangular: return 2.0 * std::sin(pi / 18.0);
        case LatticeKind::hexagonal: return 1.0 - 2.0 * std::sin(pi / 18.0);
    }
    throw std::invalid_argument("unknown lattice kind");
}

}  // namespace percsim
