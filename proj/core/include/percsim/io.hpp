#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "percsim/convolve.hpp"
#include "percsim/physics.hpp"
#include "percsim/site_bond.hpp"
#include "percsim/threshold.hpp"
#include "percsim/transparent.hpp"

namespace percsim {

/// Fixed "%.12g" rendering (nan/inf spelled out), so identical doubles
/// give identical bytes on every platform.
std::string format_double(double v);

/// Whole-file read/write; throws std::runtime_error with the path on
/// failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

/// FNV-1a 64-bit checksum, plain and as 16 hex digits; used by run
/// manifests to pin output bytes.
std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

/// CSV "p,f_lcc_mean,f_lcc_stderr,wrap_prob".
std::string curve_csv(const CanonicalCurve& curve);

/// curve_csv plus the device time axis:
/// "p,t_seconds,f_lcc_mean,f_lcc_stderr,wrap_prob".
std::string sweep_csv(const CanonicalCurve& curve, const PhysicalParams& params, int degree);

/// CSV "geometry,q,p_min,p_min_stderr,t_min_seconds,status".
std::string yield_csv(std::span<const YieldCurvePoint> points);

/// CSV "epsilon,p,t_seconds,f_lcc_mean,f_lcc_stderr" (time axis uses the
/// square architecture's d = 4).
std::string transparent_csv(const CanonicalCurve& curve, double epsilon,
                            const PhysicalParams& params);

/// JSON record {geometry, L_list, p_c_hat, sigma, criterion, status,
/// per_size}.
std::string threshold_json(const ThresholdEstimate& estimate, std::string_view geometry);

/// Same layout with q_c_hat for the site estimator.
std::string site_threshold_json(const SiteThresholdEstimate& estimate, std::string_view geometry);

/// Closed-form report: {scheme, p0, t0, eta?, t_lb_seconds, records:[{
/// geometry, p0, t0, d, p_c, t_c, t_lb}]} over the three lattice kinds.
std::string physics_json(const PhysicalParams& params);

/// JSON table of threshold-vs-epsilon entries.
std::string epsilon_table_json(const EpsilonThresholdTable& table);

}  // namespace percsim
