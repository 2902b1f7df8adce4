#include "percsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace percsim {

namespace {

using nlohmann::json;

/// Time at which the bond probability reaches p; total on [0, 1] for the
/// CSV time axis (0 at p = 0, infinity at p = 1).
double time_of_p(double p, const PhysicalParams& params, int degree) {
    if (p <= 0.0) return 0.0;
    if (p >= 1.0) return std::numeric_limits<double>::infinity();
    return time_to_threshold(p, params, degree);
}

json size_estimates_json(const std::vector<SizeEstimate>& per_size) {
    json arr = json::array();
    for (const SizeEstimate& est : per_size) {
        arr.push_back({{"L", est.L},
                       {"p_hat", est.p_hat},
                       {"std_error", est.std_error},
                       {"frac_wrapped", est.frac_wrapped},
                       {"replicas", est.replicas}});
    }
    return arr;
}

json l_list_json(const std::vector<SizeEstimate>& per_size) {
    json arr = json::array();
    for (const SizeEstimate& est : per_size) arr.push_back(est.L);
    return arr;
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failed: " + path);
    return std::move(buf).str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view data) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

std::string curve_csv(const CanonicalCurve& curve) {
    std::string out = "p,f_lcc_mean,f_lcc_stderr,wrap_prob\n";
    for (std::size_t i = 0; i < curve.p.size(); ++i) {
        out += format_double(curve.p[i]);
        out += ',';
        out += format_double(curve.f_mean[i]);
        out += ',';
        out += format_double(curve.f_stderr[i]);
        out += ',';
        out += format_double(curve.wrap_prob[i]);
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const CanonicalCurve& curve, const PhysicalParams& params, int degree) {
    std::string out = "p,t_seconds,f_lcc_mean,f_lcc_stderr,wrap_prob\n";
    for (std::size_t i = 0; i < curve.p.size(); ++i) {
        out += format_double(curve.p[i]);
        out += ',';
        out += format_double(time_of_p(curve.p[i], params, degree));
        out += ',';
        out += format_double(curve.f_mean[i]);
        out += ',';
        out += format_double(curve.f_stderr[i]);
        out += ',';
        out += format_double(curve.wrap_prob[i]);
        out += '\n';
    }
    return out;
}

std::string yield_csv(std::span<const YieldCurvePoint> points) {
    std::string out = "geometry,q,p_min,p_min_stderr,t_min_seconds,status\n";
    for (const YieldCurvePoint& pt : points) {
        out += to_string(pt.geometry.kind);
        out += ',';
        out += format_double(pt.q);
        out += ',';
        out += format_double(pt.p_min);
        out += ',';
        out += format_double(pt.p_min_stderr);
        out += ',';
        out += format_double(pt.t_min_seconds);
        out += ',';
        out += pt.status;
        out += '\n';
    }
    return out;
}

std::string transparent_csv(const CanonicalCurve& curve, double epsilon,
                            const PhysicalParams& params) {
    std::string out = "epsilon,p,t_seconds,f_lcc_mean,f_lcc_stderr\n";
    for (std::size_t i = 0; i < curve.p.size(); ++i) {
        out += format_double(epsilon);
        out += ',';
        out += format_double(curve.p[i]);
        out += ',';
        out += format_double(time_of_p(curve.p[i], params, 4));
        out += ',';
        out += format_double(curve.f_mean[i]);
        out += ',';
        out += format_double(curve.f_stderr[i]);
        out += '\n';
    }
    return out;
}

std::string threshold_json(const ThresholdEstimate& estimate, std::string_view geometry) {
    json doc = {{"geometry", geometry},
                {"L_list", l_list_json(estimate.per_size)},
                {"p_c_hat", estimate.p_hat},
                {"sigma", estimate.sigma},
                {"criterion", estimate.criterion},
                {"status", estimate.status},
                {"per_size", size_estimates_json(estimate.per_size)}};
    return doc.dump(2) + "\n";
}

std::string site_threshold_json(const SiteThresholdEstimate& estimate,
                                std::string_view geometry) {
    json doc = {{"geometry", geometry},
                {"L_list", l_list_json(estimate.per_size)},
                {"q_c_hat", estimate.q_hat},
                {"sigma", estimate.sigma},
                {"criterion", estimate.criterion},
                {"status", estimate.status},
                {"per_size", size_estimates_json(estimate.per_size)}};
    return doc.dump(2) + "\n";
}

std::string physics_json(const PhysicalParams& params) {
    validate(params);
    const double t_lb = threshold_time_lower_bound(params);
    json records = json::array();
    for (LatticeKind kind :
         {LatticeKind::square, LatticeKind::triangular, LatticeKind::hexagonal}) {
        const Geometry geometry = make_geometry(kind);
        const double p_c = exact_bond_threshold(kind);
        records.push_back({{"geometry", to_string(kind)},
                           {"p0", params.p0},
                           {"t0", params.t0},
                           {"d", geometry.degree},
                           {"p_c", p_c},
                           {"t_c", time_to_threshold(p_c, params, geometry.degree)},
                           {"t_lb", t_lb}});
    }
    json doc = {{"scheme", to_string(params.scheme)},
                {"p0", params.p0},
                {"t0", params.t0},
                {"t_lb_seconds", t_lb},
                {"records", records}};
    if (params.eta) doc["eta"] = *params.eta;
    return doc.dump(2) + "\n";
}

std::string epsilon_table_json(const EpsilonThresholdTable& table) {
    json entries = json::array();
    for (const EpsilonThresholdEntry& entry : table.entries) {
        const ThresholdEstimate& est = entry.estimate;
        const double frac =
            est.per_size.empty() ? 0.0 : est.per_size.back().frac_wrapped;
        entries.push_back({{"epsilon", entry.epsilon},
                           {"p_c_hat", est.p_hat},
                           {"sigma", est.sigma},
                           {"status", est.status},
                           {"frac_wrapped", frac}});
    }
    json doc = {{"L", table.L},
                {"criterion", "wrap_onset_mean"},
                {"min_p_c", table.min_p_c},
                {"entries", entries}};
    return doc.dump(2) + "\n";
}

}  // namespace percsim
