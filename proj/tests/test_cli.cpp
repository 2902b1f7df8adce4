#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "percsim/io.hpp"
#include "support/test_config.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string output;  // stdout + stderr
};

fs::path work_dir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "percsim_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

/// Run the CLI with PERCSIM_OUT scrubbed from the environment (tests opt
/// back in through env_prefix).
RunResult run(const std::string& args, const std::string& tag,
              const std::string& env_prefix = "env -u PERCSIM_OUT ") {
    REQUIRE_FALSE(testsupport::percsim_binary.empty());
    const fs::path log = work_dir() / (tag + ".log");
    const std::string cmd = env_prefix + testsupport::percsim_binary + " " + args + " >" +
                            log.string() + " 2>&1";
    const int raw = std::system(cmd.c_str());
    RunResult res;
    res.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    res.output = percsim::read_text_file(log.string());
    return res;
}

std::string slurp(const fs::path& p) { return percsim::read_text_file(p.string()); }

}  // namespace

TEST_CASE("version and help") {
    const RunResult v = run("--version", "version");
    CHECK(v.code == 0);
    CHECK(v.output.find("0.1.0") != std::string::npos);
    const RunResult h = run("--help", "help");
    CHECK(h.code == 0);
    CHECK(h.output.find("sweep") != std::string::npos);
    CHECK(h.output.find("threshold") != std::string::npos);
    CHECK(h.output.find("replay") != std::string::npos);
}

TEST_CASE("sweep runs are byte-identical for a fixed seed") {
    const fs::path a = work_dir() / "sweep_a";
    const fs::path b = work_dir() / "sweep_b";
    const std::string base =
        "sweep --geometry square --L 32 --p-grid 0:1:11 --replicas 2 --seed 5 --out ";
    const RunResult ra = run(base + a.string(), "sweep_a");
    const RunResult rb = run(base + b.string(), "sweep_b");
    REQUIRE(ra.code == 0);
    REQUIRE(rb.code == 0);
    CHECK(ra.output.find("wrote") != std::string::npos);
    CHECK(slurp(a / "curve.csv") == slurp(b / "curve.csv"));

    const json manifest = json::parse(slurp(a / "manifest.json"));
    CHECK(manifest.at("command") == "sweep");
    CHECK(manifest.at("seed") == 5);
    CHECK(manifest.at("outputs").contains("curve.csv"));
    // Worker count must not change the bytes either.
    const fs::path c = work_dir() / "sweep_c";
    const RunResult rc = run(base + c.string() + " --workers 3", "sweep_c");
    REQUIRE(rc.code == 0);
    CHECK(slurp(a / "curve.csv") == slurp(c / "curve.csv"));
}

TEST_CASE("sweep maps a time grid through the device model") {
    const fs::path dir = work_dir() / "sweep_t";
    const RunResult r = run(
        "sweep --geometry square --L 24 --t-grid 1ms,5ms,20ms --scheme cavity --replicas 1 "
        "--seed 2 --out " +
            dir.string(),
        "sweep_t");
    REQUIRE(r.code == 0);
    const std::string csv = slurp(dir / "curve.csv");
    // p(t) = 1 - 0.95^(t / 20us); 1 ms -> 50 rounds.
    const double p1 = 1.0 - std::pow(0.95, 50.0);
    CHECK(csv.find(percsim::format_double(p1)) != std::string::npos);
    CHECK(run("sweep --L 24 --p-grid 0:1:3 --t-grid 1ms:2ms:2 --out x", "grid_conflict").code ==
          2);
}

TEST_CASE("transparent sweep writes the epsilon-tagged table") {
    const fs::path dir = work_dir() / "sweep_eps";
    const RunResult r = run(
        "sweep --geometry square --L 64 --epsilon 0.5 --p-grid 0:1:5 --replicas 2 --seed 4 "
        "--out " +
            dir.string(),
        "sweep_eps");
    REQUIRE(r.code == 0);
    const std::string csv = slurp(dir / "curve.csv");
    CHECK(csv.rfind("epsilon,p,t_seconds,f_lcc_mean,f_lcc_stderr\n", 0) == 0);
    CHECK(csv.find("\n0.5,0,") != std::string::npos);
    CHECK(run("sweep --geometry triangular --L 64 --epsilon 0.5 --out " +
                  (work_dir() / "eps_tri").string(),
              "eps_tri")
              .code == 2);
}

TEST_CASE("replay verifies checksums and flags tampering") {
    const fs::path src = work_dir() / "replay_src";
    REQUIRE(run("sweep --L 24 --p-grid 0:1:5 --replicas 2 --seed 9 --out " + src.string(),
                "replay_src")
                .code == 0);

    const fs::path fresh = work_dir() / "replay_fresh";
    const RunResult ok =
        run("replay " + src.string() + "/manifest.json --out " + fresh.string(), "replay_ok");
    CHECK(ok.code == 0);
    CHECK(ok.output.find("replay ok") != std::string::npos);
    CHECK(slurp(src / "curve.csv") == slurp(fresh / "curve.csv"));

    // Corrupt a recorded checksum: replay must fail with a mismatch.
    json manifest = json::parse(slurp(src / "manifest.json"));
    manifest["outputs"]["curve.csv"] = "0000000000000000";
    const fs::path tampered = work_dir() / "tampered.json";
    percsim::write_text_file(tampered.string(), manifest.dump(2));
    const fs::path fresh2 = work_dir() / "replay_fresh2";
    const RunResult bad =
        run("replay " + tampered.string() + " --out " + fresh2.string(), "replay_bad");
    CHECK(bad.code == 1);
    CHECK(bad.output.find("mismatch") != std::string::npos);
}

TEST_CASE("argument errors exit with code 2") {
    CHECK(run("sweep --geometry dodecahedral --out x", "bad_geometry").code == 2);
    CHECK(run("sweep --L 24 --p-grid 0:1:5", "no_out").code == 2);  // no --out, env scrubbed
    CHECK(run("sweep --L 24 --p-grid nonsense --out x", "bad_grid").code == 2);
    CHECK(run("sweep --L 24 --p-grid 0:2:5 --out " + (work_dir() / "bad_range").string(),
              "bad_range")
              .code == 2);
    CHECK(run("threshold --site --transparent --out x", "site_vs_transparent").code == 2);
    CHECK(run("physics --scheme cavity --p0 0.1", "scheme_vs_p0").code == 2);
    CHECK(run("nonsense", "unknown_command").code == 2);
    CHECK(run("optimal-epsilon --L 32", "missing_required").code == 2);
}

TEST_CASE("PERCSIM_OUT provides the output directory") {
    const fs::path dir = work_dir() / "env_out";
    const RunResult r = run("sweep --L 24 --p-grid 0:1:3 --replicas 1 --seed 1", "env_out",
                            "env PERCSIM_OUT=" + dir.string() + " ");
    REQUIRE(r.code == 0);
    CHECK(fs::exists(dir / "curve.csv"));
    CHECK(fs::exists(dir / "manifest.json"));
}

TEST_CASE("physics reports to stdout and optionally to disk") {
    const RunResult plain = run("physics --scheme waveguide", "physics_stdout");
    REQUIRE(plain.code == 0);
    CHECK(plain.output.find("t_lb_seconds") != std::string::npos);
    CHECK(plain.output.find("\"records\"") != std::string::npos);

    const fs::path dir = work_dir() / "physics_out";
    const RunResult filed = run("physics --p0 0.05 --t0 5us --out " + dir.string(),
                                "physics_filed");
    REQUIRE(filed.code == 0);
    const json doc = json::parse(slurp(dir / "physics.json"));
    CHECK(doc.at("scheme") == "custom");
    CHECK(doc.at("p0").get<double>() == doctest::Approx(0.05));
}

TEST_CASE("threshold on a diluted lattice signals non-percolation with exit 3") {
    const fs::path dir = work_dir() / "thr_diluted";
    const RunResult r = run(
        "threshold --geometry triangular --q 0.4 --sizes 48,64 --replicas 40 --seed 2 --out " +
            dir.string(),
        "thr_diluted");
    CHECK(r.code == 3);
    const json doc = json::parse(slurp(dir / "threshold.json"));
    CHECK(doc.at("status") == "non_percolating");
    CHECK(r.output.find("status=non_percolating") != std::string::npos);
}

TEST_CASE("site threshold lands near the square value even at small sizes") {
    const fs::path dir = work_dir() / "thr_site";
    const RunResult r = run(
        "threshold --site --geometry square --sizes 32,48 --replicas 80 --seed 3 --out " +
            dir.string(),
        "thr_site");
    REQUIRE(r.code == 0);
    const json doc = json::parse(slurp(dir / "threshold.json"));
    CHECK(doc.at("criterion") == "site_wrap_onset_mean");
    const double q_hat = doc.at("q_c_hat").get<double>();
    CHECK(std::abs(q_hat - 0.5927) < 0.03);
    CHECK(r.output.find("q_c_hat=") != std::string::npos);
}

TEST_CASE("transparent threshold table comes back through the CLI") {
    const fs::path dir = work_dir() / "thr_transparent";
    const RunResult r = run(
        "threshold --transparent --epsilon 0.7,1.0 --sizes 64 --replicas 30 --seed 1 --out " +
            dir.string(),
        "thr_transparent");
    REQUIRE(r.code == 0);
    const json doc = json::parse(slurp(dir / "threshold.json"));
    REQUIRE(doc.at("entries").size() == 2);
    CHECK(doc.at("entries")[0].at("epsilon").get<double>() == doctest::Approx(0.7));
    CHECK(doc.at("L") == 64);
    CHECK(r.output.find("min_p_c=") != std::string::npos);
}

TEST_CASE("yield curve rows mark non-percolating yields without failing") {
    const fs::path dir = work_dir() / "yield_cli";
    const RunResult r = run(
        "yield --geometry hexagonal --q-grid 0.55,0.95 --sizes 64 --replicas 40 --seed 2 "
        "--out " +
            dir.string(),
        "yield_cli");
    REQUIRE(r.code == 0);
    const std::string csv = slurp(dir / "yield.csv");
    CHECK(csv.rfind("geometry,q,p_min,p_min_stderr,t_min_seconds,status\n", 0) == 0);
    CHECK(csv.find("hexagonal,0.55,nan,nan,nan,non_percolating\n") != std::string::npos);
    CHECK(csv.find("hexagonal,0.95,") != std::string::npos);
    CHECK(csv.find(",ok\n") != std::string::npos);
}

TEST_CASE("optimal-epsilon saturates for generous budgets through the CLI") {
    const fs::path dir = work_dir() / "opt_eps";
    const RunResult r = run(
        "optimal-epsilon --t-budget 900us --scheme cavity --L 64 --replicas 4 --seed 3 --out " +
            dir.string(),
        "opt_eps");
    REQUIRE(r.code == 0);
    const json doc = json::parse(slurp(dir / "optimal_epsilon.json"));
    CHECK(doc.at("epsilon").get<double>() == doctest::Approx(1.0));
    CHECK(doc.at("sub_critical") == false);
    CHECK(doc.at("p").get<double>() == doctest::Approx(1.0 - std::pow(0.95, 45.0)).epsilon(1e-9));
    CHECK(r.output.find("epsilon=") != std::string::npos);
}
