// percsim: seeded percolation runs for entanglement-network cluster growth.
// Subcommands cover canonical sweeps, threshold estimation (bond, site,
// transparent), site-yield curves, closed-form device reports, the optimal
// transparent fraction, and byte-exact replay of recorded runs.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "percsim/convolve.hpp"
#include "percsim/ensemble.hpp"
#include "percsim/io.hpp"
#include "percsim/lattice.hpp"
#include "percsim/physics.hpp"
#include "percsim/rng.hpp"
#include "percsim/site_bond.hpp"
#include "percsim/threshold.hpp"
#include "percsim/transparent.hpp"
#include "percsim/version.hpp"

namespace {

using nlohmann::json;
using namespace percsim;

int run_cli(const std::vector<std::string>& args);

// ---------------------------------------------------------------------------
// Parsing helpers

/// "12ms" / "250us" / "1.5s" / bare seconds -> seconds.
double parse_time(const std::string& text) {
    double scale = 1.0;
    std::string body = text;
    auto ends_with = [&](const char* suffix) {
        const std::size_t n = std::char_traits<char>::length(suffix);
        return body.size() > n && body.compare(body.size() - n, n, suffix) == 0;
    };
    if (ends_with("us")) {
        scale = 1e-6;
        body.resize(body.size() - 2);
    } else if (ends_with("ms")) {
        scale = 1e-3;
        body.resize(body.size() - 2);
    } else if (ends_with("s")) {
        body.resize(body.size() - 1);
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(body, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse time value '" + text + "'");
    }
    if (used != body.size()) {
        throw std::invalid_argument("cannot parse time value '" + text + "'");
    }
    return value * scale;
}

double parse_plain(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse number '" + text + "'");
    }
    if (used != text.size()) {
        throw std::invalid_argument("cannot parse number '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

/// Grid syntax: "a:b:n" (n points, endpoints inclusive), "v1,v2,..." or a
/// single value. Values go through parse_time when as_time is set.
std::vector<double> parse_grid(const std::string& text, bool as_time) {
    auto value_of = [&](const std::string& s) {
        return as_time ? parse_time(s) : parse_plain(s);
    };
    if (text.find(':') != std::string::npos) {
        const std::vector<std::string> parts = split(text, ':');
        if (parts.size() != 3) {
            throw std::invalid_argument("grid '" + text + "' must be start:stop:count");
        }
        const double a = value_of(parts[0]);
        const double b = value_of(parts[1]);
        long count = 0;
        try {
            count = std::stol(parts[2]);
        } catch (const std::exception&) {
            count = 0;
        }
        if (count < 1) {
            throw std::invalid_argument("grid count must be a positive integer in '" + text + "'");
        }
        std::vector<double> grid;
        grid.reserve(static_cast<std::size_t>(count));
        if (count == 1) {
            grid.push_back(a);
        } else {
            for (long i = 0; i < count; ++i) {
                grid.push_back(a + (b - a) * static_cast<double>(i) /
                                       static_cast<double>(count - 1));
            }
        }
        return grid;
    }
    std::vector<double> grid;
    for (const std::string& part : split(text, ',')) {
        grid.push_back(value_of(part));
    }
    return grid;
}

Geometry geometry_of(const std::string& name) {
    const auto kind = lattice_kind_from_string(name);
    if (!kind) throw std::invalid_argument("unknown geometry '" + name + "'");
    return make_geometry(*kind);
}

// ---------------------------------------------------------------------------
// Option bundles

struct SchemeOpts {
    std::string scheme;
    double p0 = 0.0;
    std::string t0 = "5us";
    double eta = 0.0;
    bool has_scheme = false;
    bool has_p0 = false;
    bool has_eta = false;

    void attach(CLI::App* sub) {
        auto* scheme_opt =
            sub->add_option("--scheme", scheme, "Preset: bullseye_sil, waveguide or cavity")
                ->check(CLI::IsMember({"bullseye_sil", "waveguide", "cavity"}));
        auto* p0_opt = sub->add_option("--p0", p0, "Custom per-attempt bond success probability");
        sub->add_option("--t0", t0, "Attempt period (suffix us/ms/s), default 5us");
        sub->add_option("--eta", eta, "Photon efficiency; implies p0 = eta^2/2 check");
        p0_opt->excludes(scheme_opt);
        scheme_opt->each([this](const std::string&) { has_scheme = true; });
        p0_opt->each([this](const std::string&) { has_p0 = true; });
        sub->get_option("--eta")->each([this](const std::string&) { has_eta = true; });
    }

    PhysicalParams resolve() const {
        if (has_p0) {
            return custom_params(p0, parse_time(t0),
                                 has_eta ? std::optional<double>(eta) : std::nullopt);
        }
        Scheme s = Scheme::waveguide;
        if (has_scheme) s = *scheme_from_string(scheme);
        return scheme_params(s);
    }

    json describe(const PhysicalParams& params) const {
        json j = {{"scheme", to_string(params.scheme)}, {"p0", params.p0}, {"t0", params.t0}};
        if (params.eta) j["eta"] = *params.eta;
        return j;
    }
};

// ---------------------------------------------------------------------------
// Output plumbing

std::optional<std::string> resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PERCSIM_OUT"); env != nullptr && *env != '\0') {
        return std::string(env);
    }
    return std::nullopt;
}

/// Write data files plus manifest.json into out_dir. The manifest records
/// the argv needed to reproduce the run and an FNV-1a checksum per output
/// file; replay compares those checksums.
void write_outputs(const std::string& out_dir, const std::string& command,
                   const std::vector<std::string>& argv, std::uint64_t seed,
                   const json& parameters,
                   const std::vector<std::pair<std::string, std::string>>& files,
                   double duration_seconds) {
    std::filesystem::create_directories(out_dir);
    json checksums = json::object();
    for (const auto& [name, content] : files) {
        write_text_file(out_dir + "/" + name, content);
        checksums[name] = fnv1a64_hex(content);
        std::printf("wrote %s/%s\n", out_dir.c_str(), name.c_str());
    }
    const json manifest = {{"command", command},       {"argv", argv},
                           {"seed", seed},             {"version", version_string},
                           {"parameters", parameters}, {"outputs", checksums},
                           {"duration_seconds", duration_seconds}};
    write_text_file(out_dir + "/manifest.json", manifest.dump(2) + "\n");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// Subcommand state

struct CliState {
    std::vector<std::string> argv;

    // shared flags
    std::string geometry = "square";
    std::uint32_t L = 512;
    int replicas = 0;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string out;
    SchemeOpts scheme;

    // sweep
    std::string p_grid_text;
    std::string t_grid_text;
    int d_override = 0;
    double epsilon = 1.0;
    bool has_epsilon = false;
    double q = 1.0;

    // threshold
    std::vector<std::uint32_t> sizes;
    bool site_mode = false;
    bool transparent_mode = false;
    bool threshold_has_q = false;
    std::string epsilon_grid_text = "0.01";

    // yield
    std::string q_grid_text;
    double tolerance = 2e-3;

    // optimal-epsilon
    std::string t_budget_text;

    // replay
    std::string manifest_path;
};

int cmd_sweep(CliState& st) {
    const auto start = std::chrono::steady_clock::now();
    const Geometry geometry = geometry_of(st.geometry);
    const PhysicalParams params = st.scheme.resolve();
    const int degree = st.d_override > 0 ? st.d_override : geometry.degree;

    std::vector<double> p_grid;
    if (!st.p_grid_text.empty()) {
        p_grid = parse_grid(st.p_grid_text, false);
    } else if (!st.t_grid_text.empty()) {
        for (double t : parse_grid(st.t_grid_text, true)) {
            p_grid.push_back(bond_prob_from_time(t, params, degree));
        }
    } else {
        p_grid = parse_grid("0:1:101", false);
    }
    for (double p : p_grid) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("bond probabilities must lie in [0, 1]");
        }
    }

    const auto out_dir = resolve_out_dir(st.out);
    if (!out_dir) {
        throw std::invalid_argument("no output directory: pass --out or set PERCSIM_OUT");
    }
    const int replicas = st.replicas > 0 ? st.replicas : 1;

    json parameters = {{"geometry", st.geometry},   {"L", st.L},
                       {"replicas", replicas},      {"seed", st.seed},
                       {"workers", st.workers},     {"d", degree},
                       {"physics", st.scheme.describe(params)}};
    std::string csv;
    if (st.has_epsilon) {
        if (geometry.kind != LatticeKind::square) {
            throw std::invalid_argument("transparent sweeps need --geometry square");
        }
        TransparentConfig config;
        config.L = st.L;
        config.epsilon = st.epsilon;
        config.site_yield = st.q;
        config.replicas = replicas;
        config.p_grid = p_grid;
        config.params = params;
        config.base_seed = st.seed;
        config.workers = st.workers;
        const CanonicalCurve curve = transparent_curve(config);
        csv = transparent_csv(curve, st.epsilon, params);
        parameters["epsilon"] = st.epsilon;
        parameters["q"] = st.q;
    } else {
        const Lattice lattice = build_lattice(geometry, st.L, Boundary::periodic);
        EnsembleOptions opts;
        opts.replicas = replicas;
        opts.base_seed = st.seed;
        opts.workers = st.workers;
        const CanonicalCurve curve = ensemble_run(lattice, p_grid, opts);
        csv = sweep_csv(curve, params, degree);
    }
    write_outputs(*out_dir, "sweep", st.argv, st.seed, parameters, {{"curve.csv", csv}},
                  seconds_since(start));
    return 0;
}

int cmd_threshold(CliState& st) {
    const auto start = std::chrono::steady_clock::now();
    if (st.sizes.empty()) st.sizes = {64, 128, 256};
    const int replicas = st.replicas > 0 ? st.replicas : 200;
    const auto out_dir = resolve_out_dir(st.out);
    if (!out_dir) {
        throw std::invalid_argument("no output directory: pass --out or set PERCSIM_OUT");
    }

    json parameters = {{"sizes", st.sizes},
                       {"replicas", replicas},
                       {"seed", st.seed},
                       {"workers", st.workers}};
    std::string content;
    int code = 0;
    if (st.transparent_mode) {
        const std::vector<double> eps_grid = parse_grid(st.epsilon_grid_text, false);
        const std::uint32_t L = *std::max_element(st.sizes.begin(), st.sizes.end());
        const EpsilonThresholdTable table =
            min_threshold_vs_epsilon(L, eps_grid, replicas, st.seed, st.workers);
        content = epsilon_table_json(table);
        parameters["mode"] = "transparent";
        parameters["L"] = L;
        parameters["epsilon_grid"] = eps_grid;
        bool any_ok = false;
        for (const EpsilonThresholdEntry& e : table.entries) {
            any_ok = any_ok || e.estimate.status == "ok";
        }
        code = any_ok ? 0 : 3;
        std::printf("min_p_c=%s over %zu epsilon values\n", format_double(table.min_p_c).c_str(),
                    table.entries.size());
    } else if (st.site_mode) {
        const SiteThresholdEstimate est =
            estimate_site_threshold(geometry_of(st.geometry), st.sizes, replicas, st.seed,
                                    st.workers);
        content = site_threshold_json(est, st.geometry);
        parameters["mode"] = "site";
        parameters["geometry"] = st.geometry;
        code = est.status == "ok" ? 0 : 3;
        std::printf("q_c_hat=%s sigma=%s status=%s\n", format_double(est.q_hat).c_str(),
                    format_double(est.sigma).c_str(), est.status.c_str());
    } else {
        const Geometry geometry = geometry_of(st.geometry);
        ThresholdEstimate est;
        if (st.threshold_has_q) {
            // Bond threshold on site-diluted lattices: fresh dilution per
            // replica, like the yield-curve machinery. Exit 3 signals a
            // yield below the site threshold.
            std::vector<std::uint32_t> sorted = st.sizes;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            std::vector<SizeEstimate> per_size;
            for (std::uint32_t L : sorted) {
                const Lattice base = build_lattice(geometry, L, Boundary::periodic);
                const std::uint64_t block = derive_block_seed(st.seed, L);
                const GraphFactory factory = [&base, q = st.q, block](int r) {
                    Lattice diluted = dilute_sites(
                        base, q, derive_seed(block, static_cast<std::uint64_t>(r),
                                             SeedStream::dilution));
                    if (diluted.n_active == 0) {
                        // Keep the sweep well-defined; an empty draw can
                        // never wrap and counts as such.
                        diluted.active.assign(diluted.n_nodes, 0);
                        diluted.active[0] = 1;
                        diluted.n_active = 1;
                    }
                    return storage_of(std::move(diluted));
                };
                per_size.push_back(wrap_onset_stats(factory, L, replicas, block, st.workers));
            }
            est = combine_size_estimates(std::move(per_size));
            parameters["q"] = st.q;
        } else {
            est = estimate_threshold(geometry, st.sizes, replicas, st.seed, st.workers);
        }
        content = threshold_json(est, st.geometry);
        parameters["mode"] = "bond";
        parameters["geometry"] = st.geometry;
        code = est.status == "ok" ? 0 : 3;
        std::printf("p_c_hat=%s sigma=%s status=%s\n", format_double(est.p_hat).c_str(),
                    format_double(est.sigma).c_str(), est.status.c_str());
    }
    write_outputs(*out_dir, "threshold", st.argv, st.seed, parameters,
                  {{"threshold.json", content}}, seconds_since(start));
    return code;
}

int cmd_yield(CliState& st) {
    const auto start = std::chrono::steady_clock::now();
    const Geometry geometry = geometry_of(st.geometry);
    const auto out_dir = resolve_out_dir(st.out);
    if (!out_dir) {
        throw std::invalid_argument("no output directory: pass --out or set PERCSIM_OUT");
    }
    YieldOptions options;
    if (!st.sizes.empty()) options.sizes = st.sizes;
    options.replicas = st.replicas > 0 ? st.replicas : 200;
    options.base_seed = st.seed;
    options.tolerance = st.tolerance;
    options.params = st.scheme.resolve();
    options.workers = st.workers;

    std::vector<double> q_grid = parse_grid(st.q_grid_text, false);
    std::sort(q_grid.begin(), q_grid.end());
    const std::vector<YieldCurvePoint> points = yield_curve(geometry, q_grid, options);

    const json parameters = {{"geometry", st.geometry},
                             {"q_grid", q_grid},
                             {"sizes", options.sizes},
                             {"replicas", options.replicas},
                             {"seed", st.seed},
                             {"tolerance", options.tolerance},
                             {"workers", st.workers},
                             {"physics", st.scheme.describe(options.params)}};
    write_outputs(*out_dir, "yield", st.argv, st.seed, parameters,
                  {{"yield.csv", yield_csv(points)}}, seconds_since(start));
    return 0;  // non-percolating points are marked in the CSV, not fatal
}

int cmd_physics(CliState& st) {
    const auto start = std::chrono::steady_clock::now();
    const PhysicalParams params = st.scheme.resolve();
    const std::string content = physics_json(params);
    std::fputs(content.c_str(), stdout);
    // Files only with an explicit --out; a PERCSIM_OUT default would make
    // every report invocation write to disk.
    if (!st.out.empty()) {
        write_outputs(st.out, "physics", st.argv, st.seed, st.scheme.describe(params),
                      {{"physics.json", content}}, seconds_since(start));
    }
    return 0;
}

int cmd_optimal_epsilon(CliState& st) {
    const auto start = std::chrono::steady_clock::now();
    const PhysicalParams params = st.scheme.resolve();
    const double t_budget = parse_time(st.t_budget_text);
    const int replicas = st.replicas > 0 ? st.replicas : 20;
    const auto out_dir = resolve_out_dir(st.out);
    if (!out_dir) {
        throw std::invalid_argument("no output directory: pass --out or set PERCSIM_OUT");
    }

    const OptimalEpsilon best =
        optimal_epsilon(t_budget, st.L, params, replicas, st.seed, st.workers);
    json evaluations = json::array();
    for (const auto& [eps, f] : best.evaluations) evaluations.push_back({eps, f});
    const json result = {{"epsilon", best.epsilon},
                         {"f_lcc", best.f_lcc},
                         {"p", best.p},
                         {"sub_critical", best.sub_critical},
                         {"t_budget_seconds", t_budget},
                         {"evaluations", evaluations}};
    const json parameters = {{"L", st.L},
                             {"replicas", replicas},
                             {"seed", st.seed},
                             {"workers", st.workers},
                             {"t_budget_seconds", t_budget},
                             {"physics", st.scheme.describe(params)}};
    std::printf("epsilon=%s f_lcc=%s%s\n", format_double(best.epsilon).c_str(),
                format_double(best.f_lcc).c_str(), best.sub_critical ? " (sub-critical)" : "");
    write_outputs(*out_dir, "optimal-epsilon", st.argv, st.seed, parameters,
                  {{"optimal_epsilon.json", result.dump(2) + "\n"}}, seconds_since(start));
    return 0;
}

int cmd_replay(CliState& st) {
    const json manifest = json::parse(read_text_file(st.manifest_path));
    const auto stored_argv = manifest.at("argv").get<std::vector<std::string>>();
    const auto out_dir = resolve_out_dir(st.out);
    if (!out_dir) {
        throw std::invalid_argument("replay needs --out (or PERCSIM_OUT) for the new run");
    }

    std::vector<std::string> replay_args;
    for (std::size_t i = 0; i < stored_argv.size(); ++i) {
        if (stored_argv[i] == "--out") {
            ++i;  // skip its value too
            continue;
        }
        if (stored_argv[i].rfind("--out=", 0) == 0) continue;
        replay_args.push_back(stored_argv[i]);
    }
    replay_args.push_back("--out");
    replay_args.push_back(*out_dir);

    const int code = run_cli(replay_args);
    if (code != 0 && code != 3) return code;

    const json fresh = json::parse(read_text_file(*out_dir + "/manifest.json"));
    const json& want = manifest.at("outputs");
    const json& got = fresh.at("outputs");
    if (want == got) {
        std::printf("replay ok: %zu outputs match\n", want.size());
        return code;
    }
    std::fprintf(stderr, "replay mismatch:\n  recorded %s\n  reproduced %s\n",
                 want.dump().c_str(), got.dump().c_str());
    return 1;
}

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args) {
    CliState st;
    st.argv = args;

    CLI::App app{"Percolation engine for entanglement-network cluster growth"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version_string);

    auto add_common = [&](CLI::App* sub, bool with_geometry) {
        if (with_geometry) {
            sub->add_option("--geometry", st.geometry, "square, triangular or hexagonal")
                ->check(CLI::IsMember({"square", "triangular", "hexagonal"}));
        }
        sub->add_option("--replicas", st.replicas, "Independent replicas");
        sub->add_option("--seed", st.seed, "Base seed; replicas derive their own streams");
        sub->add_option("--workers", st.workers, "Worker threads (never changes output bytes)");
        sub->add_option("--out", st.out, "Output directory (default: $PERCSIM_OUT)");
    };

    CLI::App* sweep = app.add_subcommand("sweep", "Canonical f_LCC / wrap curve on one lattice");
    add_common(sweep, true);
    sweep->add_option("--L", st.L, "Linear lattice size (nodes per row)");
    sweep->add_option("--p-grid", st.p_grid_text, "Bond probabilities: a:b:n or comma list");
    auto* t_grid_opt =
        sweep->add_option("--t-grid", st.t_grid_text,
                          "Entanglement times (suffix us/ms/s): a:b:n or comma list");
    t_grid_opt->excludes(sweep->get_option("--p-grid"));
    sweep->add_option("--d", st.d_override, "Override attempt-sharing degree for the time axis");
    auto* eps_opt = sweep->add_option("--epsilon", st.epsilon,
                                      "Active fraction: sweep the transparent architecture");
    eps_opt->each([&st](const std::string&) { st.has_epsilon = true; });
    sweep->add_option("--q", st.q, "Functional-site yield folded into the transparent fraction")
        ->needs(eps_opt);
    st.scheme.attach(sweep);

    CLI::App* threshold =
        app.add_subcommand("threshold", "Percolation threshold via mean wrap onset");
    add_common(threshold, true);
    threshold->add_option("--sizes", st.sizes, "Lattice sizes, e.g. 64,128,256")
        ->delimiter(',');
    auto* site_flag =
        threshold->add_flag("--site", st.site_mode, "Site-percolation threshold (bonds at p=1)");
    auto* transparent_flag = threshold->add_flag("--transparent", st.transparent_mode,
                                                 "Transparent architecture at the largest size");
    transparent_flag->excludes(site_flag);
    auto* q_opt = threshold->add_option(
        "--q", st.q, "Site yield: bond threshold on diluted lattices (exit 3 below q_c)");
    q_opt->each([&st](const std::string&) { st.threshold_has_q = true; });
    q_opt->excludes(site_flag);
    q_opt->excludes(transparent_flag);
    threshold
        ->add_option("--epsilon", st.epsilon_grid_text,
                     "Active fraction grid for --transparent: a:b:n or comma list")
        ->needs(transparent_flag);

    CLI::App* yield = app.add_subcommand("yield", "Minimum bond probability vs site yield");
    add_common(yield, true);
    yield->add_option("--q-grid", st.q_grid_text, "Site yields: a:b:n or comma list")
        ->required();
    yield->add_option("--sizes", st.sizes, "Lattice sizes; criterion uses the largest")
        ->delimiter(',');
    yield->add_option("--tolerance", st.tolerance, "Bisection width in p (default 2e-3)");
    st.scheme.attach(yield);

    CLI::App* physics =
        app.add_subcommand("physics", "Closed-form thresholds and times for given parameters");
    physics->add_option("--out", st.out, "Also write physics.json + manifest here");
    physics->add_option("--seed", st.seed, "Recorded in the manifest only");
    st.scheme.attach(physics);

    CLI::App* optimal = app.add_subcommand(
        "optimal-epsilon", "Transparent fraction maximizing the LCC at a time budget");
    add_common(optimal, false);
    optimal->add_option("--t-budget", st.t_budget_text, "Time budget (suffix us/ms/s)")
        ->required();
    optimal->add_option("--L", st.L, "Linear lattice size");
    st.scheme.attach(optimal);

    CLI::App* replay = app.add_subcommand("replay", "Re-run a manifest and verify checksums");
    replay->add_option("manifest", st.manifest_path, "Path to a recorded manifest.json")
        ->required();
    replay->add_option("--out", st.out, "Directory for the reproduced outputs");

    std::vector<const char*> cargv;
    cargv.reserve(args.size() + 1);
    cargv.push_back("percsim");
    for (const std::string& a : args) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(st);
        if (threshold->parsed()) return cmd_threshold(st);
        if (yield->parsed()) return cmd_yield(st);
        if (physics->parsed()) return cmd_physics(st);
        if (optimal->parsed()) return cmd_optimal_epsilon(st);
        if (replay->parsed()) return cmd_replay(st);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args);
}
